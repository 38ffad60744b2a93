#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "swhist/errors.hpp"
#include "swhist/graph/edge.hpp"

namespace swhist::oracle {

/// Deduplicated simple graph used by the exact solvers.
struct graph_snapshot {
    std::vector<edge> edges;
    std::optional<vertex_id> vertex_count_hint;
};

/// Builds a snapshot from an edge sequence, dropping duplicate arrivals.
inline graph_snapshot make_snapshot(std::span<const edge> items,
                                    std::optional<vertex_id> hint = std::nullopt) {
    graph_snapshot g;
    g.vertex_count_hint = hint;
    std::unordered_set<edge, edge_hash> seen;
    seen.reserve(items.size());
    for (const edge& e : items) {
        if (seen.insert(e).second) g.edges.push_back(e);
    }
    return g;
}

inline constexpr std::size_t oracle_edge_cap = 2000;
inline constexpr std::size_t vc_depth_cap = 40;

struct matching_result {
    std::size_t size = 0;
    std::vector<edge> matching;
};

struct cover_result {
    std::size_t size = 0;
    std::vector<vertex_id> cover;
};

namespace detail {

inline std::vector<edge> greedy_matching_of(const std::vector<edge>& edges) {
    std::vector<edge> matched;
    std::unordered_set<vertex_id> used;
    for (const edge& e : edges) {
        if (!used.count(e.u) && !used.count(e.v)) {
            matched.push_back(e);
            used.insert(e.u);
            used.insert(e.v);
        }
    }
    return matched;
}

inline std::size_t active_vertex_count(const std::vector<edge>& edges) {
    std::unordered_set<vertex_id> vs;
    for (const edge& e : edges) {
        vs.insert(e.u);
        vs.insert(e.v);
    }
    return vs.size();
}

inline std::vector<edge> without_endpoints(const std::vector<edge>& edges, vertex_id a, vertex_id b) {
    std::vector<edge> rest;
    rest.reserve(edges.size());
    for (const edge& e : edges) {
        if (!e.touches(a) && !e.touches(b)) rest.push_back(e);
    }
    return rest;
}

inline std::unordered_map<vertex_id, std::size_t> degrees(const std::vector<edge>& edges) {
    std::unordered_map<vertex_id, std::size_t> deg;
    for (const edge& e : edges) {
        ++deg[e.u];
        ++deg[e.v];
    }
    return deg;
}

// Both solvers are additive over connected components, and segments of
// sparse streams decompose into many small ones.
inline std::vector<std::vector<edge>> connected_components(const std::vector<edge>& edges) {
    std::unordered_map<vertex_id, vertex_id> parent;
    parent.reserve(2 * edges.size());
    std::function<vertex_id(vertex_id)> find = [&](vertex_id x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const edge& e : edges) {
        for (vertex_id v : {e.u, e.v})
            if (!parent.count(v)) parent[v] = v;
        parent[find(e.u)] = find(e.v);
    }
    std::unordered_map<vertex_id, std::size_t> slot;
    std::vector<std::vector<edge>> components;
    for (const edge& e : edges) {
        vertex_id root = find(e.u);
        auto [it, fresh] = slot.try_emplace(root, components.size());
        if (fresh) components.emplace_back();
        components[it->second].push_back(e);
    }
    return components;
}

// Include/exclude branching on one edge at a time. A pendant edge (an
// endpoint of degree 1) always belongs to some maximum matching, so it is
// taken without branching; that collapses forests without any search.
inline void mm_branch(std::vector<edge> edges, std::vector<edge>& chosen,
                      matching_result& best) {
    std::size_t pendants_taken = 0;
    for (;;) {
        if (edges.empty()) break;
        auto deg = degrees(edges);
        auto pendant = std::find_if(edges.begin(), edges.end(), [&](const edge& e) {
            return deg[e.u] == 1 || deg[e.v] == 1;
        });
        if (pendant == edges.end()) break;
        edge e = *pendant;
        chosen.push_back(e);
        ++pendants_taken;
        edges = without_endpoints(edges, e.u, e.v);
    }

    if (edges.empty()) {
        if (chosen.size() > best.size) {
            best.size = chosen.size();
            best.matching = chosen;
        }
    } else {
        const std::size_t g = greedy_matching_of(edges).size();
        const std::size_t ub =
            chosen.size() + std::min({2 * g, active_vertex_count(edges) / 2, edges.size()});
        if (ub > best.size) {
            auto deg = degrees(edges);
            auto pick = std::max_element(edges.begin(), edges.end(), [&](const edge& a, const edge& b) {
                return deg[a.u] + deg[a.v] < deg[b.u] + deg[b.v];
            });
            edge e = *pick;

            chosen.push_back(e);
            mm_branch(without_endpoints(edges, e.u, e.v), chosen, best);
            chosen.pop_back();

            std::vector<edge> rest;
            rest.reserve(edges.size() - 1);
            for (const edge& other : edges) {
                if (other != e) rest.push_back(other);
            }
            mm_branch(std::move(rest), chosen, best);
        }
    }

    chosen.resize(chosen.size() - pendants_taken);
}

} // namespace detail

/**
 * Exact maximum-matching size with a witness, by include/exclude branching
 * with a greedy upper bound. Desk scale only; throws capacity_error above
 * the edge cap. The witness is verified disjoint before returning.
 */
inline matching_result max_matching_exact(const graph_snapshot& g) {
    if (g.edges.size() > oracle_edge_cap)
        throw capacity_error("max_matching_exact: edge cap exceeded");

    matching_result total;
    for (auto& component : detail::connected_components(g.edges)) {
        matching_result best;
        best.matching = detail::greedy_matching_of(component);
        best.size = best.matching.size();
        std::vector<edge> chosen;
        detail::mm_branch(std::move(component), chosen, best);
        total.size += best.size;
        total.matching.insert(total.matching.end(), best.matching.begin(), best.matching.end());
    }

    std::unordered_set<vertex_id> used;
    for (const edge& e : total.matching) {
        if (!used.insert(e.u).second || !used.insert(e.v).second)
            throw std::logic_error("max_matching_exact: witness is not a matching");
    }
    return total;
}

namespace detail {

// Branch-and-bound on the endpoints of an uncovered edge. `best` holds the
// smallest cover found so far; a branch is cut once the chosen vertices plus
// a matching lower bound on the remainder cannot beat it, or once it runs
// past the depth cap. On return `chosen` is restored to its entry state.
inline void vc_branch(std::vector<edge> edges, std::vector<vertex_id>& chosen,
                      std::vector<vertex_id>& best) {
    const std::size_t mark = chosen.size();
    for (;;) {
        if (edges.empty()) {
            if (chosen.size() < best.size()) best = chosen;
            break;
        }
        const std::size_t lower = chosen.size() + greedy_matching_of(edges).size();
        if (lower >= best.size() || chosen.size() > vc_depth_cap) break;

        auto deg = degrees(edges);
        const std::size_t budget = best.size() - 1 - chosen.size();
        // A vertex of degree above the remaining budget must be in the cover.
        auto heavy = std::find_if(edges.begin(), edges.end(), [&](const edge& e) {
            return deg[e.u] > budget || deg[e.v] > budget;
        });
        if (heavy != edges.end()) {
            vertex_id v = deg[heavy->u] > budget ? heavy->u : heavy->v;
            chosen.push_back(v);
            std::erase_if(edges, [&](const edge& e) { return e.touches(v); });
            continue;
        }
        // For a pendant edge only the non-leaf endpoint needs trying.
        auto pendant = std::find_if(edges.begin(), edges.end(), [&](const edge& e) {
            return deg[e.u] == 1 || deg[e.v] == 1;
        });
        if (pendant != edges.end()) {
            vertex_id v = deg[pendant->u] == 1 ? pendant->v : pendant->u;
            chosen.push_back(v);
            std::erase_if(edges, [&](const edge& e) { return e.touches(v); });
            continue;
        }

        auto pick = std::max_element(edges.begin(), edges.end(), [&](const edge& a, const edge& b) {
            return std::max(deg[a.u], deg[a.v]) < std::max(deg[b.u], deg[b.v]);
        });
        const edge e = *pick;
        vertex_id first = deg[e.u] >= deg[e.v] ? e.u : e.v;
        vertex_id second = first == e.u ? e.v : e.u;
        for (vertex_id v : {first, second}) {
            std::vector<edge> rest = edges;
            std::erase_if(rest, [&](const edge& r) { return r.touches(v); });
            chosen.push_back(v);
            vc_branch(std::move(rest), chosen, best);
            chosen.pop_back();
        }
        break;
    }
    chosen.resize(mark);
}

} // namespace detail

/**
 * Exact minimum vertex-cover with a witness (standard 2^k endpoint
 * branching). Covers larger than vc_depth_cap raise capacity_error instead
 * of running an unbounded search.
 */
inline cover_result min_vertex_cover_exact(const graph_snapshot& g) {
    if (g.edges.size() > oracle_edge_cap)
        throw capacity_error("min_vertex_cover_exact: edge cap exceeded");

    std::vector<vertex_id> cover;
    for (auto& component : detail::connected_components(g.edges)) {
        // Greedy matching endpoints are a feasible 2-approximate warm start;
        // the search only needs to find strictly better covers.
        std::vector<vertex_id> best;
        for (const edge& e : detail::greedy_matching_of(component)) {
            best.push_back(e.u);
            best.push_back(e.v);
        }
        std::vector<vertex_id> chosen;
        detail::vc_branch(std::move(component), chosen, best);
        cover.insert(cover.end(), best.begin(), best.end());
        if (cover.size() > vc_depth_cap)
            throw capacity_error("min_vertex_cover_exact: cover exceeds the depth cap");
    }

    for (const edge& e : g.edges) {
        bool covered = false;
        for (vertex_id v : cover) {
            if (e.touches(v)) { covered = true; break; }
        }
        if (!covered) throw std::logic_error("min_vertex_cover_exact: witness does not cover");
    }
    std::sort(cover.begin(), cover.end());
    return cover_result{cover.size(), std::move(cover)};
}

} // namespace swhist::oracle
