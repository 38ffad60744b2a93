#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "swhist/errors.hpp"
#include "swhist/estimators.hpp"
#include "swhist/graph/alpha_good.hpp"
#include "swhist/graph/greedy_matching.hpp"
#include "swhist/histogram.hpp"
#include "swhist/oracle/window.hpp"

namespace swhist {

enum class window_algo { mm_via_goodedges, mm_squared, vc_forest, vc_approx, generic };

inline std::string_view to_string(window_algo a) {
    switch (a) {
        case window_algo::mm_via_goodedges: return "mm_via_goodedges";
        case window_algo::mm_squared: return "mm_squared";
        case window_algo::vc_forest: return "vc_forest";
        case window_algo::vc_approx: return "vc_approx";
        case window_algo::generic: return "generic";
    }
    return "unknown";
}

inline window_algo parse_window_algo(std::string_view name) {
    for (window_algo a : {window_algo::mm_via_goodedges, window_algo::mm_squared,
                          window_algo::vc_forest, window_algo::vc_approx, window_algo::generic}) {
        if (to_string(a) == name) return a;
    }
    throw config_error("unknown algorithm: " + std::string(name));
}

struct algo_spec {
    window_algo kind = window_algo::generic;
    std::uint32_t alpha = 1;
    double epsilon = 0.1;
    std::uint64_t window_w = 1;

    void validate() const {
        histogram_config probe;
        probe.epsilon = epsilon;
        probe.window_w = window_w;
        probe.validate();
        if ((kind == window_algo::mm_via_goodedges || kind == window_algo::mm_squared) && alpha < 1)
            throw config_error("algo_spec: alpha must be >= 1");
    }
};

/**
 * The certified estimate/truth ratio ceiling for each algorithm, from the
 * per-theorem constants; the lower side is always 1. Single source of truth
 * for tests and record evaluation.
 */
inline double upper_ratio_bound(const algo_spec& spec) {
    const double e = spec.epsilon;
    const double stretch = (1.0 + e) * (1.0 + e) / ((1.0 - e) * (1.0 - e));
    const double a = double(spec.alpha);
    switch (spec.kind) {
        case window_algo::mm_via_goodedges: return 2.0 * (a + 2.0) * stretch;
        case window_algo::mm_squared: return 2.0 * (a + 2.0) * (a + 2.0) * stretch;
        case window_algo::vc_forest: return 4.0 * stretch;
        case window_algo::vc_approx: return 4.0 * (1.0 + 2.0 * e);
        case window_algo::generic: return stretch;
    }
    throw config_error("upper_ratio_bound: unknown algorithm");
}

/// The window quantity each algorithm estimates, for oracle comparisons.
inline oracle::window_problem truth_problem(window_algo a) {
    switch (a) {
        case window_algo::mm_via_goodedges:
        case window_algo::mm_squared: return oracle::window_problem::matching;
        case window_algo::vc_forest:
        case window_algo::vc_approx: return oracle::window_problem::vertex_cover;
        case window_algo::generic: return oracle::window_problem::item_count;
    }
    throw config_error("truth_problem: unknown algorithm");
}

/**
 * Maximum-matching size estimation in bounded-arboricity windows: the
 * histogram runs directly on the alpha-good maximum E*_alpha, which the
 * tracker computes exactly, and the result doubles as the matching estimate.
 * Certified ratio on arboricity-alpha windows: [1, 2(alpha+2)(1+e)^2/(1-e)^2].
 */
class mm_goodedges_window {
public:
    using item_type = edge;
    using histogram_type = sliding_histogram<alpha_good_tracker>;

    explicit mm_goodedges_window(const algo_spec& spec)
        : hist_(histogram_config{spec.epsilon, spec.window_w, 1.0, 2.0, 1.0},
                alpha_good_tracker(spec.alpha)) {
        spec.validate();
    }

    void update(const edge& e) { hist_.update(e); }
    double estimate() const { return hist_.query(); }
    std::size_t bucket_count() const { return hist_.bucket_count(); }
    std::size_t footprint() const { return hist_.footprint(); }
    const histogram_type& histogram() const { return hist_; }

private:
    histogram_type hist_;
};

/**
 * Same tracker, but accounted as a C=(alpha+2)-approximate matching
 * estimator, so the query applies the full scaling and the certified ratio
 * ceiling grows to 2(alpha+2)^2(1+e)^2/(1-e)^2. Kept to expose the
 * quadratic-vs-linear dependence on C next to mm_goodedges_window.
 */
class mm_squared_window {
public:
    using item_type = edge;
    using histogram_type = sliding_histogram<alpha_good_tracker>;

    explicit mm_squared_window(const algo_spec& spec)
        : hist_(histogram_config{spec.epsilon, spec.window_w, 1.0, 2.0, double(spec.alpha) + 2.0},
                alpha_good_tracker(spec.alpha)) {
        spec.validate();
    }

    void update(const edge& e) { hist_.update(e); }
    double estimate() const { return hist_.query(); }
    std::size_t bucket_count() const { return hist_.bucket_count(); }
    std::size_t footprint() const { return hist_.footprint(); }
    const histogram_type& histogram() const { return hist_; }

private:
    histogram_type hist_;
};

/**
 * Vertex-cover size estimation on forest windows: identical machinery to
 * mm_goodedges_window with alpha=1, relabeled through the matching/cover
 * identity on forests. Certified ratio: [1, 4(1+e)^2/(1-e)^2]. Forest-ness
 * of the input windows is the caller's contract, not checked online.
 */
class vc_forest_window {
public:
    using item_type = edge;

    explicit vc_forest_window(const algo_spec& spec) : inner_(forced_alpha(spec)) {}

    void update(const edge& e) { inner_.update(e); }
    double estimate() const { return inner_.estimate(); }
    std::size_t bucket_count() const { return inner_.bucket_count(); }
    std::size_t footprint() const { return inner_.footprint(); }

private:
    static algo_spec forced_alpha(algo_spec spec) {
        spec.alpha = 1;
        return spec;
    }
    mm_goodedges_window inner_;
};

/**
 * Vertex-cover reporting for general graphs: Algorithm 1 bucket management
 * over greedy-matching sizes, answering with the matched-vertex set of the
 * first bucket. The returned set covers every window edge (it covers all of
 * B1, a superset), and its size is at most 4(1+2e) times the optimum.
 */
class vc_approx_window {
public:
    using item_type = edge;
    using histogram_type = sliding_histogram<greedy_match_estimator>;

    struct cover_output {
        std::vector<vertex_id> vertices;
        std::size_t size = 0;
    };

    explicit vc_approx_window(const algo_spec& spec)
        : hist_(histogram_config{spec.epsilon, spec.window_w, 2.0, 2.0, 1.0},
                greedy_match_estimator{}) {
        spec.validate();
    }

    void update(const edge& e) { hist_.update(e); }

    /// 2 * m-hat(B1): the size of the reported cover.
    double estimate() const {
        if (hist_.bucket_count() == 0)
            throw empty_error("vc_approx_window: query on empty state");
        return 2.0 * hist_.bucket_at(0).cached_value;
    }

    cover_output cover() const {
        if (hist_.bucket_count() == 0)
            throw empty_error("vc_approx_window: query on empty state");
        cover_output out;
        out.vertices = hist_.bucket_at(0).estimator.cover_vertices();
        out.size = out.vertices.size();
        return out;
    }

    /// True when B1 is a strict superset of the window (the scaled-query branch).
    bool used_second_bucket() const { return !hist_.window_in_first_bucket(); }

    double first_bucket_matching() const { return hist_.bucket_at(0).cached_value; }
    double second_bucket_matching() const { return hist_.bucket_at(1).cached_value; }

    std::size_t bucket_count() const { return hist_.bucket_count(); }
    std::size_t footprint() const { return hist_.footprint(); }
    const histogram_type& histogram() const { return hist_; }

private:
    histogram_type hist_;
};

/// Plain item counting over the window; the classic smooth-histogram demo.
class generic_count_window {
public:
    using item_type = edge;
    using histogram_type = sliding_histogram<count_estimator<edge>>;

    explicit generic_count_window(const algo_spec& spec)
        : hist_(histogram_config{spec.epsilon, spec.window_w, 1.0, 1.0, 1.0}) {
        spec.validate();
    }

    void update(const edge& e) { hist_.update(e); }
    double estimate() const { return hist_.query(); }
    std::size_t bucket_count() const { return hist_.bucket_count(); }
    std::size_t footprint() const { return hist_.footprint(); }
    const histogram_type& histogram() const { return hist_; }

private:
    histogram_type hist_;
};

} // namespace swhist
