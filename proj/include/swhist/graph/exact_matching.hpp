#pragma once

#include <optional>
#include <unordered_set>
#include <vector>

#include "swhist/errors.hpp"
#include "swhist/graph/edge.hpp"
#include "swhist/oracle/matching.hpp"

namespace swhist {

/**
 * Desk-scale exact maximum-matching estimator: stores the distinct ingested
 * edges and answers with the exact matching size. Used to instantiate the
 * framework with approximation factor exactly 1 in verification runs. Not a
 * small-space streaming algorithm, hence the hard edge cap.
 */
class exact_match_estimator {
public:
    using item_type = edge;

    explicit exact_match_estimator(std::size_t edge_cap = 2000) : edge_cap_(edge_cap) {}

    void ingest(const edge& e) {
        if (edges_.count(e)) return;
        if (edges_.size() >= edge_cap_)
            throw capacity_error("exact_match_estimator: distinct edge cap exceeded");
        edges_.insert(e);
        cached_.reset();
    }

    double value() const {
        if (!cached_) {
            oracle::graph_snapshot g;
            g.edges.assign(edges_.begin(), edges_.end());
            cached_ = oracle::max_matching_exact(g).size;
        }
        return double(*cached_);
    }

    std::size_t distinct_edges() const { return edges_.size(); }
    std::size_t footprint() const { return edges_.size(); }

private:
    std::size_t edge_cap_;
    std::unordered_set<edge, edge_hash> edges_;
    mutable std::optional<std::size_t> cached_;
};

} // namespace swhist
