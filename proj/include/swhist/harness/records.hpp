#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "swhist/errors.hpp"

namespace swhist {

/**
 * One per-query measurement emitted by a run: the estimate, the structural
 * size proxies, the echoed parameters, and (when the oracle is enabled) the
 * exact window value with the resulting ratio. Serialized one JSON object
 * per line; absent optionals are omitted.
 */
struct query_record {
    std::uint64_t t = 0;
    double estimate = 0.0;
    std::optional<double> truth;
    std::optional<double> ratio;
    std::optional<bool> cover_valid;
    std::optional<std::string> error;
    std::size_t bucket_count = 0;
    std::size_t footprint = 0;
    std::string algorithm;
    double epsilon = 0.0;
    std::uint32_t alpha = 0;
    std::uint64_t w = 0;
};

inline void write_record(std::ostream& os, const query_record& r) {
    nlohmann::json j{{"t", r.t},
                     {"estimate", r.estimate},
                     {"bucket_count", r.bucket_count},
                     {"footprint", r.footprint},
                     {"algorithm", r.algorithm},
                     {"epsilon", r.epsilon},
                     {"alpha", r.alpha},
                     {"w", r.w}};
    if (r.truth) j["truth"] = *r.truth;
    if (r.ratio) j["ratio"] = *r.ratio;
    if (r.cover_valid) j["cover_valid"] = *r.cover_valid;
    if (r.error) j["error"] = *r.error;
    os << j.dump() << "\n";
}

inline query_record parse_record(const std::string& line) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("record: bad json: ") + e.what());
    }
    try {
        query_record r;
        r.t = j.at("t").get<std::uint64_t>();
        r.estimate = j.at("estimate").get<double>();
        r.bucket_count = j.at("bucket_count").get<std::size_t>();
        r.footprint = j.at("footprint").get<std::size_t>();
        r.algorithm = j.at("algorithm").get<std::string>();
        r.epsilon = j.at("epsilon").get<double>();
        r.alpha = j.at("alpha").get<std::uint32_t>();
        r.w = j.at("w").get<std::uint64_t>();
        if (j.contains("truth")) r.truth = j["truth"].get<double>();
        if (j.contains("ratio")) r.ratio = j["ratio"].get<double>();
        if (j.contains("cover_valid")) r.cover_valid = j["cover_valid"].get<bool>();
        if (j.contains("error")) r.error = j["error"].get<std::string>();
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("record: missing or mistyped field: ") + e.what());
    }
}

inline std::vector<query_record> read_records(std::istream& is) {
    std::vector<query_record> records;
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        records.push_back(parse_record(line));
    }
    return records;
}

} // namespace swhist
