#include "qtsteer/output.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

#include "qtsteer/errors.hpp"

namespace qtsteer {

std::string format_number(double value)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%#.12g", value);
    return buf;
}

std::string render_csv(const std::vector<SweepRecord>& records)
{
    std::string out(kCsvHeader);
    out += '\n';
    for (const auto& r : records) {
        out += r.scenario;
        for (double v : {r.p, r.r_q, r.r_t, r.phi}) {
            out += ',';
            out += format_number(v);
        }
        out += ',';
        out += r.quantity;
        out += ',';
        out += format_number(r.value);
        out += '\n';
    }
    return out;
}

std::string render_json(const std::vector<SweepRecord>& records)
{
    auto array = nlohmann::ordered_json::array();
    for (const auto& r : records) {
        array.push_back({{"scenario", r.scenario},
                         {"p", r.p},
                         {"r_q", r.r_q},
                         {"r_t", r.r_t},
                         {"phi", r.phi},
                         {"quantity", r.quantity},
                         {"value", r.value}});
    }
    return array.dump(2) + "\n";
}

std::vector<SweepRecord> parse_json(std::string_view text)
{
    const auto doc = nlohmann::json::parse(text);
    std::vector<SweepRecord> out;
    for (const auto& item : doc) {
        out.push_back({item.at("scenario").get<std::string>(), item.at("p").get<double>(),
                       item.at("r_q").get<double>(), item.at("r_t").get<double>(),
                       item.at("phi").get<double>(), item.at("quantity").get<std::string>(),
                       item.at("value").get<double>()});
    }
    return out;
}

void write_output(const std::vector<SweepRecord>& records, const std::string& path,
                  OutputFormat format)
{
    for (const auto& r : records) {
        if (!std::isfinite(r.value)) {
            throw std::invalid_argument("write_output: non-finite value for " + r.quantity);
        }
    }
    const std::string body = format == OutputFormat::Json ? render_json(records)
                                                          : render_csv(records);

    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot open " + path + ": " + std::strerror(errno));
    }
    out << body;
    out.flush();
    if (!out) {
        throw IoError("write to " + path + " failed: " + std::strerror(errno));
    }
}

} // namespace qtsteer
