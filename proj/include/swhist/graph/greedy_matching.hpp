#pragma once

#include <unordered_set>
#include <vector>

#include "swhist/graph/edge.hpp"

namespace swhist {

/**
 * Greedy maximal matching over an edge stream: an arriving edge is matched
 * iff both endpoints are still free. The matched vertex set therefore covers
 * every ingested edge, which is what the sliding-window vertex-cover
 * algorithm reports. Duplicate arrivals are no-ops by construction.
 */
class greedy_match_estimator {
public:
    using item_type = edge;

    void ingest(const edge& e) {
        if (matched_vertices_.count(e.u) || matched_vertices_.count(e.v)) return;
        matched_edges_.push_back(e);
        matched_vertices_.insert(e.u);
        matched_vertices_.insert(e.v);
    }

    /// Matching size m-hat.
    double value() const { return double(matched_edges_.size()); }

    std::size_t size() const { return matched_edges_.size(); }

    const std::vector<edge>& matched_edges() const { return matched_edges_; }

    /// Endpoints of the matching, in match order; a vertex cover of all ingested edges.
    std::vector<vertex_id> cover_vertices() const {
        std::vector<vertex_id> cover;
        cover.reserve(2 * matched_edges_.size());
        for (const edge& e : matched_edges_) {
            cover.push_back(e.u);
            cover.push_back(e.v);
        }
        return cover;
    }

    bool covers(const edge& e) const {
        return matched_vertices_.count(e.u) > 0 || matched_vertices_.count(e.v) > 0;
    }

    std::size_t footprint() const { return matched_edges_.size() + matched_vertices_.size(); }

private:
    std::vector<edge> matched_edges_;
    std::unordered_set<vertex_id> matched_vertices_;
};

} // namespace swhist
