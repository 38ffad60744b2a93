#pragma once

#include <cstdint>
#include <unordered_set>
#include <vector>

#include "swhist/errors.hpp"
#include "swhist/harness/stream_file.hpp"
#include "swhist/rng.hpp"

namespace swhist {

/**
 * The tightness family: n vertex-disjoint paths x-y-z-w streamed as three
 * segments, A holding every {x,y}, B every {y,z}, C every {z,w}. The maximum
 * matching of AB, B and BC is n while ABC reaches 2n, which pins the
 * almost-smoothness factor 2 of matching and vertex-cover size.
 */
struct three_paths_stream {
    stream_data stream;
    std::size_t a_end = 0; // A = [0, a_end)
    std::size_t b_end = 0; // B = [a_end, b_end), C = [b_end, len)
};

inline three_paths_stream gen_three_paths(std::uint32_t n_copies) {
    if (n_copies < 1) throw config_error("gen_three_paths: n_copies must be >= 1");
    three_paths_stream out;
    out.stream.vertex_count = 4 * n_copies;
    auto& edges = out.stream.edges;
    for (std::uint32_t i = 0; i < n_copies; ++i)
        edges.emplace_back(4 * i + 1, 4 * i + 2);
    for (std::uint32_t i = 0; i < n_copies; ++i)
        edges.emplace_back(4 * i + 2, 4 * i + 3);
    for (std::uint32_t i = 0; i < n_copies; ++i)
        edges.emplace_back(4 * i + 3, 4 * i + 4);
    out.a_end = n_copies;
    out.b_end = 2 * std::size_t(n_copies);
    return out;
}

namespace detail {

class union_find {
public:
    explicit union_find(std::size_t n) : parent_(n) {
        for (std::size_t i = 0; i < n; ++i) parent_[i] = i;
    }
    std::size_t find(std::size_t x) {
        while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
        return x;
    }
    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent_[a] = b;
        return true;
    }

private:
    std::vector<std::size_t> parent_;
};

} // namespace detail

/// A random forest on n vertices with edge_count edges, in random arrival order.
inline stream_data gen_forest(vertex_id n, std::size_t edge_count, std::uint64_t seed) {
    if (n < 2 && edge_count > 0) throw config_error("gen_forest: need n >= 2 for edges");
    if (edge_count > std::size_t(n) - 1)
        throw config_error("gen_forest: a forest on n vertices has at most n-1 edges");
    rng gen(seed);
    detail::union_find uf(n + 1);
    stream_data s;
    s.vertex_count = n;
    std::size_t attempts = 0;
    while (s.edges.size() < edge_count) {
        if (++attempts > 1000 * (edge_count + 1))
            throw config_error("gen_forest: generation stalled");
        auto u = static_cast<vertex_id>(gen.uniform(1, n));
        auto v = static_cast<vertex_id>(gen.uniform(1, n));
        if (u == v) continue;
        if (uf.unite(u, v)) s.edges.emplace_back(u, v);
    }
    gen.shuffle(s.edges);
    return s;
}

/**
 * The union of `alpha` random forests with distinct edges overall, so the
 * result has arboricity at most alpha by construction. Arrival order is a
 * uniform shuffle. The per-forest partition is returned for tests.
 */
struct alpha_union_stream {
    stream_data stream;
    std::vector<std::vector<edge>> forests;
};

inline alpha_union_stream gen_alpha_union(vertex_id n, std::uint32_t alpha,
                                          std::size_t edge_count, std::uint64_t seed) {
    if (alpha < 1) throw config_error("gen_alpha_union: alpha must be >= 1");
    if (n < 2 && edge_count > 0) throw config_error("gen_alpha_union: need n >= 2 for edges");
    if (edge_count > alpha * (std::size_t(n) - 1))
        throw config_error("gen_alpha_union: too many edges for the requested arboricity");
    rng gen(seed);
    std::vector<detail::union_find> forests_uf(alpha, detail::union_find(n + 1));
    alpha_union_stream out;
    out.stream.vertex_count = n;
    out.forests.assign(alpha, {});
    std::unordered_set<edge, edge_hash> seen;
    std::size_t attempts = 0;
    while (out.stream.edges.size() < edge_count) {
        if (++attempts > 2000 * (edge_count + 1))
            throw config_error("gen_alpha_union: generation stalled");
        auto f = static_cast<std::size_t>(gen.uniform(0, alpha - 1));
        auto u = static_cast<vertex_id>(gen.uniform(1, n));
        auto v = static_cast<vertex_id>(gen.uniform(1, n));
        if (u == v) continue;
        edge e(u, v);
        if (seen.count(e)) continue;
        if (!forests_uf[f].unite(u, v)) continue;
        seen.insert(e);
        out.forests[f].push_back(e);
        out.stream.edges.push_back(e);
    }
    gen.shuffle(out.stream.edges);
    return out;
}

/// G(n, p): every pair independently with probability p, random arrival order.
inline stream_data gen_gnp(vertex_id n, double p, std::uint64_t seed) {
    if (p < 0.0 || p > 1.0) throw config_error("gen_gnp: p must be in [0, 1]");
    rng gen(seed);
    stream_data s;
    s.vertex_count = n;
    for (vertex_id u = 1; u <= n; ++u) {
        for (vertex_id v = u + 1; v <= n; ++v) {
            if (gen.bernoulli(p)) s.edges.emplace_back(u, v);
        }
    }
    gen.shuffle(s.edges);
    return s;
}

} // namespace swhist
