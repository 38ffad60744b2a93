#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>

#include "swhist/oracle/alpha_good.hpp"
#include "swhist/oracle/matching.hpp"

namespace swhist::oracle {

enum class window_problem { matching, vertex_cover, alpha_good_star, item_count };

/**
 * Exact value of the chosen quantity on the active window at time t, i.e.,
 * on the last min(w, t) stream items. Matching and vertex-cover are taken on
 * the deduplicated window graph; the alpha-good maximum is positional over
 * the window subsequence.
 */
inline double window_truth(std::span<const edge> stream, std::uint64_t w, std::uint64_t t,
                           window_problem problem, std::uint32_t alpha = 1) {
    if (w < 1) throw config_error("window_truth: window must be >= 1");
    if (t < 1 || t > stream.size()) throw std::out_of_range("window_truth: t out of range");

    const std::uint64_t len = std::min<std::uint64_t>(w, t);
    std::span<const edge> window = stream.subspan(static_cast<std::size_t>(t - len),
                                                  static_cast<std::size_t>(len));
    switch (problem) {
        case window_problem::matching:
            return double(max_matching_exact(make_snapshot(window)).size);
        case window_problem::vertex_cover:
            return double(min_vertex_cover_exact(make_snapshot(window)).size);
        case window_problem::alpha_good_star:
            return double(e_star_exact(window, alpha));
        case window_problem::item_count:
            return double(len);
    }
    throw std::logic_error("window_truth: unknown problem");
}

} // namespace swhist::oracle
