#ifndef QTSTEER_TRENDS_HPP
#define QTSTEER_TRENDS_HPP

/*
 * Qualitative comparison of steerability degrees with the published
 * figure trends (qubit-only and qutrit-only acceleration, p in
 * {0, 0.01, 0.05}):
 *   - both degrees decay (are non-increasing) in r,
 *   - the qubit steers the qutrit at least as well as the reverse,
 *   - with the qutrit accelerated, steer_ba dies at a smaller r than steer_ab,
 *   - both degrees are non-increasing in p at fixed r.
 * A convention "matches the figures" when it reproduces the decay in r; the
 * first such convention (as-printed before deficit) is then held to the
 * remaining three trends.
 */

#include <optional>
#include <string>
#include <vector>

#include "qtsteer/steering.hpp"

namespace qtsteer {

struct ConventionTrend {
    Convention convention = Convention::AsPrinted;
    bool decays_in_r = true;
    bool ab_dominates = true;
    double worst_ab_minus_ba = 0.0;  // most negative steer_ab - steer_ba seen
    bool ba_vanishes_first = true;   // qutrit-only scenario, every p
    bool decays_in_p = true;
    std::vector<std::string> notes;
};

enum class TrendVerdict { Reproduced, NotReproduced, NoMatchingConvention };

struct TrendReport {
    std::vector<ConventionTrend> conventions;
    std::optional<Convention> figure_matching;
    TrendVerdict verdict = TrendVerdict::NotReproduced;
    // At r = 0 the printed closed forms and the oracle sums are related by
    // I + S; listed per p for the record.
    std::vector<std::string> r0_mapping;
};

TrendReport analyze_figure_trends(std::size_t r_points = 101);

std::string format_trend_report(const TrendReport& report);

} // namespace qtsteer

#endif
