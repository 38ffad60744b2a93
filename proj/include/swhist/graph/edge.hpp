#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>

namespace swhist {

using vertex_id = std::uint32_t;

/**
 * One undirected edge insertion in a graph stream. Self-loops are rejected
 * at construction; {u,v} and {v,u} are the same edge (stored with u < v).
 * Vertex ids are opaque positive integers, no global vertex count required.
 */
struct edge {
    vertex_id u = 0;
    vertex_id v = 0;

    edge() = default;

    edge(vertex_id a, vertex_id b) {
        if (a == b) throw std::invalid_argument("edge: self-loop rejected");
        if (a == 0 || b == 0) throw std::invalid_argument("edge: vertex ids start at 1");
        u = a < b ? a : b;
        v = a < b ? b : a;
    }

    friend bool operator==(const edge&, const edge&) = default;
    friend auto operator<=>(const edge&, const edge&) = default;

    bool touches(vertex_id x) const noexcept { return u == x || v == x; }
};

struct edge_hash {
    std::size_t operator()(const edge& e) const noexcept {
        std::uint64_t k = (std::uint64_t(e.u) << 32) | e.v;
        k ^= k >> 33;
        k *= 0xff51afd7ed558ccdULL;
        k ^= k >> 33;
        return static_cast<std::size_t>(k);
    }
};

} // namespace swhist
