#pragma once

#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

#include "flipcover/bitrow.hpp"

namespace flipcover {

// Distance sentinel for unreachable pairs.  Kept distinguished: callers
// compare against it, never against "some large number".
inline constexpr int kUnreachable = std::numeric_limits<int>::max();

// Simple undirected graph.  adj lists are sorted, duplicate-free, loop-free
// and symmetric.  layer/native are optional per-vertex tags carried by the
// pattern generators (empty when unused); operations that rebuild vertex sets
// drop them unless documented otherwise.
struct graph {
    int n = 0;
    std::vector<std::vector<int>> adj;
    std::vector<int> layer;
    std::vector<std::uint8_t> native;

    bool has_edge(int u, int v) const;
    int degree(int u) const { return static_cast<int>(adj[static_cast<std::size_t>(u)].size()); }
    long long edge_count() const;
    std::vector<std::pair<int, int>> edge_list() const; // lex-sorted, u < v
};

graph build_graph(int n, const std::vector<std::pair<int, int>>& edges);

// BFS distances from src; kUnreachable where disconnected.
std::vector<int> distances_from(const graph& g, int src);

// BFS distances from src using only edges whose endpoints satisfy `allowed`
// (src itself is always allowed).
std::vector<int> distances_from_within(const graph& g, int src, const bitrow& allowed);

// r-th power: edge uv iff 1 <= dist_g(u,v) <= r.  Requires r >= 1.
graph graph_power(const graph& g, int r);

struct induced_result {
    graph g;                // vertices renumbered 0..k-1 in the given order
    std::vector<int> orig;  // orig[new id] = old id
};
// vs must be duplicate-free and in range; order is preserved.
induced_result induced_subgraph(const graph& g, const std::vector<int>& vs);

// Bipartite graph with its own index spaces for the two sides.
struct bigraph {
    int na = 0, nb = 0;
    std::vector<std::vector<int>> adj_a; // a -> sorted list of b-ids
    std::vector<std::vector<int>> adj_b; // transpose

    bool has_edge(int a, int b) const;
    long long edge_count() const;
    int deg_a(int a) const { return static_cast<int>(adj_a[static_cast<std::size_t>(a)].size()); }
    int deg_b(int b) const { return static_cast<int>(adj_b[static_cast<std::size_t>(b)].size()); }
};

bigraph make_bigraph(int na, int nb, const std::vector<std::pair<int, int>>& edges);

// Semi-induced bipartite subgraph: keeps exactly the A-B edges, ignoring
// edges inside either side.  A and B must be disjoint, duplicate-free, in range.
bigraph semi_induced(const graph& g, const std::vector<int>& A, const std::vector<int>& B);

// Max distance (in g, not within xs) over pairs of xs; kUnreachable if some
// pair is disconnected; 0 for a singleton.  xs must be nonempty.
int weak_diameter(const graph& g, const std::vector<int>& xs);

// Adjacency rows as bitsets (row u = neighbors of u).
std::vector<bitrow> adjacency_rows(const graph& g);

// Disjoint union; keeps layer/native tags when both operands carry them.
graph disjoint_union(const graph& a, const graph& b);

} // namespace flipcover
