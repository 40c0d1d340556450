#ifndef QTSTEER_OUTPUT_HPP
#define QTSTEER_OUTPUT_HPP

#include <string>
#include <string_view>
#include <vector>

#include "qtsteer/sweep.hpp"

namespace qtsteer {

inline constexpr std::string_view kCsvHeader = "scenario,p,r_q,r_t,phi,quantity,value";

/// 12 significant digits, trailing zeros kept: 0.5 -> "0.500000000000".
std::string format_number(double value);

std::string render_csv(const std::vector<SweepRecord>& records);
/// Array of objects with the CSV column names; numbers at full precision.
std::string render_json(const std::vector<SweepRecord>& records);
std::vector<SweepRecord> parse_json(std::string_view text);

/// Writes records in the given format. Throws std::invalid_argument for
/// non-finite values and IoError (naming the path) when writing fails.
void write_output(const std::vector<SweepRecord>& records, const std::string& path,
                  OutputFormat format);

} // namespace qtsteer

#endif
