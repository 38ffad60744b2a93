#pragma once

#include <cstdint>
#include <deque>
#include <unordered_map>
#include <unordered_set>

#include "swhist/errors.hpp"
#include "swhist/graph/edge.hpp"

namespace swhist {

/**
 * Exact online tracker of alpha-good edges. An edge arrival stays "live"
 * while at most alpha later incident arrivals exist at each endpoint, so per
 * vertex it suffices to remember the last alpha+1 incident arrival indices:
 * the arrival that falls off that window has just seen its (alpha+1)-th
 * successor and dies. value() reports the running maximum of the live count
 * over all prefixes, i.e., E*_alpha of the ingested stream.
 *
 * Each arrival is a distinct stream element; duplicate edges are tracked
 * positionally, matching the prefix-based definition.
 */
class alpha_good_tracker {
public:
    using item_type = edge;

    explicit alpha_good_tracker(std::uint32_t alpha = 1) : alpha_(alpha) {
        if (alpha < 1) throw config_error("alpha_good_tracker: alpha must be >= 1");
    }

    void ingest(const edge& e) {
        const std::uint64_t arrival = ++time_;
        live_.insert(arrival);
        for (vertex_id x : {e.u, e.v}) {
            auto& recent = per_vertex_recent_[x];
            recent.push_back(arrival);
            if (recent.size() > alpha_ + 1) {
                live_.erase(recent.front()); // may already be dead via the other endpoint
                recent.pop_front();
            }
        }
        running_max_ = std::max<std::uint64_t>(running_max_, live_.size());
    }

    /// E*_alpha of the ingested stream.
    double value() const { return double(running_max_); }

    /// |E_alpha(S_t)| for the current prefix.
    std::size_t current_count() const { return live_.size(); }

    std::uint32_t alpha() const { return alpha_; }

    std::size_t footprint() const {
        std::size_t entries = 0;
        for (const auto& [v, recent] : per_vertex_recent_) entries += recent.size();
        return live_.size() + entries;
    }

private:
    std::uint32_t alpha_;
    std::uint64_t time_ = 0;
    std::uint64_t running_max_ = 0;
    std::unordered_set<std::uint64_t> live_;
    std::unordered_map<vertex_id, std::deque<std::uint64_t>> per_vertex_recent_;
};

} // namespace swhist
