#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "swhist/errors.hpp"
#include "swhist/graph/edge.hpp"

namespace swhist::oracle {

inline constexpr std::size_t e_star_length_cap = 10000;

/**
 * Per-prefix counts of alpha-good edges, straight from the definition: for
 * every arrival i the oracle keeps the number of later incident arrivals at
 * each endpoint, updated by rescanning earlier arrivals whenever a new edge
 * comes in, then recounts which arrivals qualify. Quadratic and deliberately
 * free of the incremental bookkeeping the online tracker uses.
 */
inline std::vector<std::size_t> alpha_good_prefix_counts(std::span<const edge> stream,
                                                         std::uint32_t alpha) {
    if (alpha < 1) throw config_error("alpha_good_prefix_counts: alpha must be >= 1");
    if (stream.size() > e_star_length_cap)
        throw capacity_error("alpha_good_prefix_counts: stream length cap exceeded");

    std::vector<std::size_t> later_at_u(stream.size(), 0);
    std::vector<std::size_t> later_at_v(stream.size(), 0);
    std::vector<std::size_t> counts;
    counts.reserve(stream.size());

    for (std::size_t t = 0; t < stream.size(); ++t) {
        const edge& arrived = stream[t];
        for (std::size_t i = 0; i < t; ++i) {
            if (stream[i].u == arrived.u || stream[i].u == arrived.v) ++later_at_u[i];
            if (stream[i].v == arrived.u || stream[i].v == arrived.v) ++later_at_v[i];
        }
        std::size_t good = 0;
        for (std::size_t i = 0; i <= t; ++i) {
            if (later_at_u[i] <= alpha && later_at_v[i] <= alpha) ++good;
        }
        counts.push_back(good);
    }
    return counts;
}

/// E*_alpha: the maximum number of alpha-good edges over all prefixes.
inline std::size_t e_star_exact(std::span<const edge> stream, std::uint32_t alpha) {
    std::size_t best = 0;
    for (std::size_t c : alpha_good_prefix_counts(stream, alpha)) best = std::max(best, c);
    return best;
}

} // namespace swhist::oracle
