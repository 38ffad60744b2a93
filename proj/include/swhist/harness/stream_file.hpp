#pragma once

#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "swhist/errors.hpp"
#include "swhist/graph/edge.hpp"

namespace swhist {

/**
 * An edge stream with its header. On disk: a first line "n <N> len <L>"
 * followed by L lines "u v" with 1 <= u,v <= N and u != v.
 */
struct stream_data {
    vertex_id vertex_count = 0;
    std::vector<edge> edges;
};

inline void write_stream(std::ostream& os, const stream_data& s) {
    os << "n " << s.vertex_count << " len " << s.edges.size() << "\n";
    for (const edge& e : s.edges) os << e.u << " " << e.v << "\n";
}

inline stream_data read_stream(std::istream& is) {
    stream_data s;
    std::string line;
    if (!std::getline(is, line)) throw parse_error("stream: missing header line");
    {
        std::istringstream hs(line);
        std::string kn, kl;
        std::uint64_t n = 0, len = 0;
        if (!(hs >> kn >> n >> kl >> len) || kn != "n" || kl != "len")
            throw parse_error("stream: malformed header: " + line);
        std::string rest;
        if (hs >> rest) throw parse_error("stream: trailing header tokens: " + line);
        s.vertex_count = static_cast<vertex_id>(n);
        s.edges.reserve(static_cast<std::size_t>(len));

        for (std::uint64_t i = 0; i < len; ++i) {
            if (!std::getline(is, line))
                throw parse_error("stream: expected " + std::to_string(len) + " edges, got " +
                                  std::to_string(i));
            std::istringstream es(line);
            std::uint64_t u = 0, v = 0;
            if (!(es >> u >> v))
                throw parse_error("stream: bad edge at line " + std::to_string(i + 2) + ": " + line);
            if (es >> rest)
                throw parse_error("stream: trailing tokens at line " + std::to_string(i + 2));
            if (u < 1 || v < 1 || u > n || v > n)
                throw parse_error("stream: vertex id out of [1, n] at line " + std::to_string(i + 2));
            if (u == v)
                throw parse_error("stream: self-loop at line " + std::to_string(i + 2));
            s.edges.emplace_back(static_cast<vertex_id>(u), static_cast<vertex_id>(v));
        }
    }
    return s;
}

} // namespace swhist
