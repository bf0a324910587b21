#pragma once

// Small fixtures and helpers shared by the test binaries.

#include <optional>
#include <utility>
#include <vector>

#include "flipcover/error.hpp"
#include "flipcover/graph.hpp"

namespace tfx {

// Runs f and reports the error code it threw, if any.
template <class F>
std::optional<flipcover::errc> code_of(F&& f) {
    try {
        std::forward<F>(f)();
        return std::nullopt;
    } catch (const flipcover::error& e) {
        return e.code();
    }
}

inline flipcover::graph path_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return flipcover::build_graph(n, e);
}

inline flipcover::graph cycle_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return flipcover::build_graph(n, e);
}

inline flipcover::graph complete_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return flipcover::build_graph(n, e);
}

// Star with `leaves` leaves; center is vertex 0.
inline flipcover::graph star_graph(int leaves) {
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
    return flipcover::build_graph(leaves + 1, e);
}

inline flipcover::graph petersen() {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);          // outer C5
        e.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
        e.emplace_back(i, 5 + i);                // spokes
    }
    return flipcover::build_graph(10, e);
}

// Relabels with perm[old] = new, carrying the tags along.
inline flipcover::graph permute_graph(const flipcover::graph& g, const std::vector<int>& perm) {
    std::vector<std::pair<int, int>> e;
    for (auto [u, v] : g.edge_list())
        e.emplace_back(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
    flipcover::graph h = flipcover::build_graph(g.n, e);
    if (!g.layer.empty()) {
        h.layer.assign(static_cast<std::size_t>(g.n), 0);
        h.native.assign(static_cast<std::size_t>(g.n), 0);
        for (int v = 0; v < g.n; ++v) {
            h.layer[static_cast<std::size_t>(perm[static_cast<std::size_t>(v)])] =
                g.layer[static_cast<std::size_t>(v)];
            h.native[static_cast<std::size_t>(perm[static_cast<std::size_t>(v)])] =
                g.native[static_cast<std::size_t>(v)];
        }
    }
    return h;
}

// True when `map` (g -> h) sends edges to edges and non-edges to non-edges.
inline bool is_isomorphism_witness(const flipcover::graph& g, const flipcover::graph& h,
                                   const std::vector<int>& map) {
    if (g.n != h.n || static_cast<int>(map.size()) != g.n) return false;
    std::vector<char> hit(static_cast<std::size_t>(h.n), 0);
    for (int v = 0; v < g.n; ++v) {
        int m = map[static_cast<std::size_t>(v)];
        if (m < 0 || m >= h.n || hit[static_cast<std::size_t>(m)]) return false;
        hit[static_cast<std::size_t>(m)] = 1;
    }
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v)
            if (g.has_edge(u, v) != h.has_edge(map[static_cast<std::size_t>(u)], map[static_cast<std::size_t>(v)]))
                return false;
    return true;
}

} // namespace tfx
