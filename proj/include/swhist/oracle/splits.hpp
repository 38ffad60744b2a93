#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "swhist/oracle/alpha_good.hpp"
#include "swhist/oracle/matching.hpp"
#include "swhist/rng.hpp"

namespace swhist::oracle {

/// A function evaluable on any contiguous segment of an edge stream.
using segment_fn = std::function<double(std::span<const edge>)>;

inline segment_fn matching_size_fn() {
    return [](std::span<const edge> s) { return double(max_matching_exact(make_snapshot(s)).size); };
}

inline segment_fn vertex_cover_size_fn() {
    return [](std::span<const edge> s) { return double(min_vertex_cover_exact(make_snapshot(s)).size); };
}

inline segment_fn e_star_fn(std::uint32_t alpha) {
    return [alpha](std::span<const edge> s) { return double(e_star_exact(s, alpha)); };
}

/// Greedy-matching size by direct replay, independent of the online estimator.
inline segment_fn greedy_matching_size_fn() {
    return [](std::span<const edge> s) {
        std::vector<edge> v(s.begin(), s.end());
        return double(detail::greedy_matching_of(v).size());
    };
}

/**
 * One split A=[a,b), B=[b,c), C=[c,d) of a stream with the f values needed by
 * the subadditivity and almost-smoothness checks. Two-way checks are the
 * special case of an empty C.
 */
struct split_report {
    std::size_t a = 0, b = 0, c = 0, d = 0;
    double f_a = 0, f_b = 0, f_c = 0, f_ab = 0, f_bc = 0, f_abc = 0;
    bool violated = false;
    std::string witness;
};

struct smooth_params {
    double c = 1.0; // left-monotonicity factor
    double d = 2.0; // almost-smoothness factor
};

namespace detail {

// Absorbs the binary representation of grid epsilons; every inequality with
// exact constants is compared without slack.
inline constexpr double grid_slack = 1e-9;

inline split_report evaluate_boundaries(const segment_fn& f, std::span<const edge> stream,
                                        std::size_t a, std::size_t b, std::size_t c,
                                        std::size_t d) {
    split_report r;
    r.a = a; r.b = b; r.c = c; r.d = d;
    auto seg = [&](std::size_t lo, std::size_t hi) { return stream.subspan(lo, hi - lo); };
    r.f_a = f(seg(a, b));
    r.f_b = f(seg(b, c));
    r.f_c = f(seg(c, d));
    r.f_ab = f(seg(a, c));
    r.f_bc = f(seg(b, d));
    r.f_abc = f(seg(a, d));
    return r;
}

} // namespace detail

/// Evaluates one split and applies the subadditivity inequality f(AB) <= f(A)+f(B).
inline split_report evaluate_subadditive_split(const segment_fn& f, std::span<const edge> stream,
                                               std::size_t a, std::size_t b, std::size_t c) {
    split_report r = detail::evaluate_boundaries(f, stream, a, b, c, c);
    if (r.f_ab > r.f_a + r.f_b) {
        r.violated = true;
        std::ostringstream os;
        os << "f(AB)=" << r.f_ab << " > f(A)+f(B)=" << r.f_a + r.f_b;
        r.witness = os.str();
    }
    return r;
}

/**
 * Evaluates one three-way split against (c,d)-almost-smoothness:
 * left-monotonicity f(B) <= c*f(AB), the ratio form
 * f(B)*f(ABC) <= d*f(BC)*f(AB) whenever both denominators are nonzero, and
 * the epsilon-grid implication form as redundancy.
 */
inline split_report evaluate_smooth_split(const segment_fn& f, std::span<const edge> stream,
                                          std::size_t a, std::size_t b, std::size_t c,
                                          std::size_t d, const smooth_params& p) {
    split_report r = detail::evaluate_boundaries(f, stream, a, b, c, d);
    std::ostringstream os;

    if (r.f_b > p.c * r.f_ab) {
        r.violated = true;
        os << "f(B)=" << r.f_b << " > c*f(AB)=" << p.c * r.f_ab << "; ";
    }
    if (r.f_ab != 0.0 && r.f_abc != 0.0 && r.f_b * r.f_abc > p.d * r.f_bc * r.f_ab) {
        r.violated = true;
        os << "f(B)*f(ABC)=" << r.f_b * r.f_abc << " > d*f(BC)*f(AB)=" << p.d * r.f_bc * r.f_ab
           << "; ";
    }
    for (int k = 1; k <= 19; ++k) {
        const double eps = 0.05 * k;
        if (eps * r.f_ab <= r.f_b + detail::grid_slack &&
            eps * r.f_abc > p.d * r.f_bc + detail::grid_slack) {
            r.violated = true;
            os << "eps=" << eps << ": eps*f(ABC)=" << eps * r.f_abc
               << " > d*f(BC)=" << p.d * r.f_bc << "; ";
            break;
        }
    }
    r.witness = os.str();
    return r;
}

/**
 * Random two-way splits (plus the canonical half split) of random segments;
 * returns the violating reports only.
 */
inline std::vector<split_report> check_subadditive(const segment_fn& f,
                                                   std::span<const edge> stream,
                                                   std::size_t trials, std::uint64_t seed) {
    std::vector<split_report> violations;
    const std::size_t n = stream.size();
    rng gen(seed);
    auto consider = [&](std::size_t a, std::size_t b, std::size_t c) {
        split_report r = evaluate_subadditive_split(f, stream, a, b, c);
        if (r.violated) violations.push_back(std::move(r));
    };
    consider(0, n / 2, n);
    for (std::size_t i = 0; i < trials; ++i) {
        std::size_t cut[3];
        for (auto& x : cut) x = static_cast<std::size_t>(gen.uniform(0, n));
        std::sort(std::begin(cut), std::end(cut));
        consider(cut[0], cut[1], cut[2]);
    }
    return violations;
}

/**
 * Random three-way splits (plus the canonical equal-thirds split, which is
 * the shape tightness constructions use); returns the violating reports only.
 */
inline std::vector<split_report> check_almost_smooth(const segment_fn& f, const smooth_params& p,
                                                     std::span<const edge> stream,
                                                     std::size_t trials, std::uint64_t seed) {
    std::vector<split_report> violations;
    const std::size_t n = stream.size();
    rng gen(seed);
    auto consider = [&](std::size_t a, std::size_t b, std::size_t c, std::size_t d) {
        split_report r = evaluate_smooth_split(f, stream, a, b, c, d, p);
        if (r.violated) violations.push_back(std::move(r));
    };
    consider(0, n / 3, 2 * n / 3, n);
    for (std::size_t i = 0; i < trials; ++i) {
        std::size_t cut[4];
        for (auto& x : cut) x = static_cast<std::size_t>(gen.uniform(0, n));
        std::sort(std::begin(cut), std::end(cut));
        consider(cut[0], cut[1], cut[2], cut[3]);
    }
    return violations;
}

} // namespace swhist::oracle
