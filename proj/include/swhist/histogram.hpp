#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "swhist/errors.hpp"
#include "swhist/estimators.hpp"

namespace swhist {

/**
 * Parameters of the bucketed sliding-window scheme. epsilon drives the
 * merge rule, window_w the expiry rule; c (left-monotonicity), d
 * (almost-smoothness) and C (estimator approximation factor) only scale the
 * query output. delta is carried for configuration fidelity but has no
 * runtime role with deterministic estimators.
 */
struct histogram_config {
    double epsilon = 0.1;
    std::uint64_t window_w = 1;
    double c = 1.0;
    double d = 2.0;
    double C = 1.0;
    double delta = 0.0;

    void validate() const {
        if (!(epsilon > 0.0) || !(epsilon <= 0.5))
            throw config_error("histogram_config: epsilon must be in (0, 1/2]");
        if (window_w < 1) throw config_error("histogram_config: window_w must be >= 1");
        if (!(c >= 1.0)) throw config_error("histogram_config: c must be >= 1");
        if (!(d >= 1.0)) throw config_error("histogram_config: d must be >= 1");
        if (!(C >= 1.0)) throw config_error("histogram_config: C must be >= 1");
        if (!(delta >= 0.0) || !(delta < 1.0))
            throw config_error("histogram_config: delta must be in [0, 1)");
    }
};

/// Scale factor applied to the second bucket's value on a query: d*c*C*(1+eps)/(1-eps)^2.
inline double query_multiplier(const histogram_config& cfg) {
    return cfg.d * cfg.c * cfg.C * (1.0 + cfg.epsilon) / ((1.0 - cfg.epsilon) * (1.0 - cfg.epsilon));
}

/**
 * Bucketed sliding-window wrapper around an insertion-only estimator.
 *
 * Each bucket is a suffix of the stream carrying its own estimator instance;
 * the bucket list is kept sparse by deleting buckets sandwiched between two
 * whose values are within factor 1-eps of each other, and the first bucket
 * is dropped once the second one already covers the active window. After
 * every update the list satisfies, on start indices,
 * start(B1) <= max(1, t-w+1) < start(B2) < ... < start(Bk), and for every
 * i <= k-2 with value(Bi) > 0, value(B_{i+2}) <= (1-eps)*value(Bi).
 *
 * Estimator values are cached once per update; the merge sweep and queries
 * read the caches, so each estimator is queried exactly once per item.
 * Instances are single-writer; distinct instances are independent.
 */
template <insertion_estimator E>
class sliding_histogram {
public:
    using item_type = typename E::item_type;

    struct bucket {
        std::uint64_t start_index; // 1-based position of the bucket's first item
        E estimator;
        double cached_value;
    };

    explicit sliding_histogram(histogram_config cfg, E prototype = E())
        : cfg_(cfg), prototype_(std::move(prototype)) {
        cfg_.validate();
    }

    void update(const item_type& item) {
        ++time_;
        buckets_.push_back(bucket{time_, prototype_, 0.0});
        for (bucket& b : buckets_) {
            b.estimator.ingest(item);
            b.cached_value = b.estimator.value();
        }
        merge_sweep();
        if (buckets_.size() >= 2 && buckets_[1].start_index <= window_start())
            buckets_.erase(buckets_.begin());
    }

    /**
     * The window estimate. When the first bucket is exactly the active
     * window (always the case while t <= w) its value is returned directly;
     * otherwise the second bucket's value scaled by query_multiplier().
     */
    double query() const {
        if (buckets_.empty()) throw empty_error("sliding_histogram: query on empty histogram");
        if (buckets_.front().start_index == window_start()) return buckets_.front().cached_value;
        return query_multiplier(cfg_) * buckets_.at(1).cached_value;
    }

    /// True when the query would answer from the first bucket (B1 == W).
    bool window_in_first_bucket() const {
        if (buckets_.empty()) throw empty_error("sliding_histogram: empty histogram");
        return buckets_.front().start_index == window_start();
    }

    std::size_t bucket_count() const noexcept { return buckets_.size(); }

    /// Stored atoms across all estimators plus one start counter per bucket.
    std::size_t footprint() const {
        std::size_t total = buckets_.size();
        for (const bucket& b : buckets_) total += b.estimator.footprint();
        return total;
    }

    std::uint64_t time() const noexcept { return time_; }

    /// 1-based start position of the active window: max(1, t-w+1).
    std::uint64_t window_start() const noexcept {
        return time_ >= cfg_.window_w ? time_ - cfg_.window_w + 1 : 1;
    }

    const bucket& bucket_at(std::size_t i) const { return buckets_.at(i); }

    const histogram_config& config() const noexcept { return cfg_; }

private:
    // One pass of the deletion rule: for each surviving position i, find the
    // largest j with value(Bj) > (1-eps)*value(Bi), drop everything strictly
    // between them, and advance. When value(Bi) is 0 no j qualifies (0 > 0 is
    // false) and the position is simply skipped.
    void merge_sweep() {
        const double keep = 1.0 - cfg_.epsilon;
        std::size_t i = 0;
        while (i + 2 < buckets_.size()) {
            const double threshold = keep * buckets_[i].cached_value;
            std::size_t j = i;
            for (std::size_t cand = buckets_.size(); cand-- > i;) {
                if (buckets_[cand].cached_value > threshold) {
                    j = cand;
                    break;
                }
            }
            if (j > i + 1)
                buckets_.erase(buckets_.begin() + long(i) + 1, buckets_.begin() + long(j));
            ++i;
        }
    }

    histogram_config cfg_;
    E prototype_;
    std::vector<bucket> buckets_;
    std::uint64_t time_ = 0;
};

} // namespace swhist
