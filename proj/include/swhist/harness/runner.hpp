#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <type_traits>
#include <unordered_set>
#include <vector>

#include "swhist/algorithms.hpp"
#include "swhist/doubling.hpp"
#include "swhist/harness/records.hpp"
#include "swhist/harness/stream_file.hpp"
#include "swhist/oracle/window.hpp"

namespace swhist {

struct run_options {
    bool with_oracle = false;
    std::uint64_t every = 1;
    bool doubling = false;
};

namespace detail {

inline bool cover_covers_window(std::span<const edge> stream, std::uint64_t w, std::uint64_t t,
                                const std::vector<vertex_id>& cover) {
    std::unordered_set<vertex_id> in_cover(cover.begin(), cover.end());
    const std::uint64_t len = std::min<std::uint64_t>(w, t);
    for (std::uint64_t i = t - len; i < t; ++i) {
        const edge& e = stream[static_cast<std::size_t>(i)];
        if (!in_cover.count(e.u) && !in_cover.count(e.v)) return false;
    }
    return true;
}

template <typename Alg>
std::vector<query_record> run_with(const algo_spec& spec, const stream_data& s,
                                   const run_options& opt) {
    std::vector<query_record> records;
    auto emit = [&](std::uint64_t t, const Alg& alg) {
        query_record r;
        r.t = t;
        r.estimate = alg.estimate();
        r.bucket_count = alg.bucket_count();
        r.footprint = alg.footprint();
        r.algorithm = std::string(to_string(spec.kind));
        r.epsilon = spec.epsilon;
        r.alpha = spec.alpha;
        r.w = spec.window_w;
        if (opt.with_oracle) {
            try {
                const double truth = oracle::window_truth(s.edges, spec.window_w, t,
                                                          truth_problem(spec.kind), spec.alpha);
                r.truth = truth;
                if (truth > 0.0) r.ratio = r.estimate / truth;
                if constexpr (std::is_same_v<Alg, vc_approx_window>) {
                    r.cover_valid =
                        cover_covers_window(s.edges, spec.window_w, t, alg.cover().vertices);
                }
            } catch (const capacity_error& e) {
                r.error = e.what();
            }
        }
        records.push_back(std::move(r));
    };

    const std::uint64_t every = opt.every == 0 ? 1 : opt.every;
    if (opt.doubling) {
        doubling_wrapper<Alg> wrapped(spec.window_w, [spec] { return Alg(spec); });
        std::uint64_t t = 0;
        for (const edge& e : s.edges) {
            wrapped.update(e);
            ++t;
            if (t % every == 0) emit(t, wrapped.covering_instance());
        }
    } else {
        Alg alg(spec);
        std::uint64_t t = 0;
        for (const edge& e : s.edges) {
            alg.update(e);
            ++t;
            if (t % every == 0) emit(t, alg);
        }
    }
    return records;
}

} // namespace detail

/// Replays a stream through one algorithm, one record per emitted query.
inline std::vector<query_record> run_algorithm(const algo_spec& spec, const stream_data& s,
                                               const run_options& opt = {}) {
    spec.validate();
    switch (spec.kind) {
        case window_algo::mm_via_goodedges:
            return detail::run_with<mm_goodedges_window>(spec, s, opt);
        case window_algo::mm_squared:
            return detail::run_with<mm_squared_window>(spec, s, opt);
        case window_algo::vc_forest:
            return detail::run_with<vc_forest_window>(spec, s, opt);
        case window_algo::vc_approx:
            return detail::run_with<vc_approx_window>(spec, s, opt);
        case window_algo::generic:
            return detail::run_with<generic_count_window>(spec, s, opt);
    }
    throw config_error("run_algorithm: unknown algorithm");
}

struct eval_summary {
    std::size_t records = 0;
    std::size_t checked = 0; // records carrying a ratio
    double max_ratio = 0.0;
    double mean_ratio = 0.0;
    std::size_t violations = 0;
    std::size_t max_bucket_count = 0;
    std::size_t max_footprint = 0;
};

/**
 * Aggregates a record set and recomputes each record's certified bound from
 * its echoed parameters; a record violates when its ratio leaves
 * [1, upper_ratio_bound], its cover check failed, or it carries an error.
 */
inline eval_summary eval_records(std::span<const query_record> records) {
    eval_summary sum;
    double ratio_total = 0.0;
    for (const query_record& r : records) {
        ++sum.records;
        sum.max_bucket_count = std::max(sum.max_bucket_count, r.bucket_count);
        sum.max_footprint = std::max(sum.max_footprint, r.footprint);
        if (r.error) {
            ++sum.violations;
            continue;
        }
        if (r.ratio) {
            ++sum.checked;
            ratio_total += *r.ratio;
            sum.max_ratio = std::max(sum.max_ratio, *r.ratio);
            algo_spec spec;
            spec.kind = parse_window_algo(r.algorithm);
            spec.alpha = r.alpha == 0 ? 1 : r.alpha;
            spec.epsilon = r.epsilon;
            spec.window_w = r.w;
            if (*r.ratio < 1.0 || *r.ratio > upper_ratio_bound(spec)) ++sum.violations;
        }
        if (r.cover_valid && !*r.cover_valid) ++sum.violations;
    }
    if (sum.checked > 0) sum.mean_ratio = ratio_total / double(sum.checked);
    return sum;
}

} // namespace swhist
