#include "flipcover/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "flipcover/error.hpp"

namespace flipcover {

bool graph::has_edge(int u, int v) const {
    const auto& a = adj[static_cast<std::size_t>(u)];
    return std::binary_search(a.begin(), a.end(), v);
}

long long graph::edge_count() const {
    long long d = 0;
    for (const auto& a : adj) d += static_cast<long long>(a.size());
    return d / 2;
}

std::vector<std::pair<int, int>> graph::edge_list() const {
    std::vector<std::pair<int, int>> es;
    es.reserve(static_cast<std::size_t>(edge_count()));
    for (int u = 0; u < n; ++u)
        for (int v : adj[static_cast<std::size_t>(u)])
            if (u < v) es.emplace_back(u, v);
    return es;
}

graph build_graph(int n, const std::vector<std::pair<int, int>>& edges) {
    require(n >= 0, errc::bad_params, "vertex count must be nonnegative");
    graph g;
    g.n = n;
    g.adj.assign(static_cast<std::size_t>(n), {});
    for (auto [u, v] : edges) {
        require(u >= 0 && u < n && v >= 0 && v < n, errc::vertex_out_of_range,
                "edge (" + std::to_string(u) + "," + std::to_string(v) + ") outside [0," + std::to_string(n) + ")");
        require(u != v, errc::loop_edge, "loop at vertex " + std::to_string(u));
        g.adj[static_cast<std::size_t>(u)].push_back(v);
        g.adj[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto& a : g.adj) {
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
    }
    return g;
}

std::vector<int> distances_from(const graph& g, int src) {
    require(src >= 0 && src < g.n, errc::vertex_out_of_range, "BFS source out of range");
    std::vector<int> dist(static_cast<std::size_t>(g.n), kUnreachable);
    std::vector<int> q;
    q.reserve(static_cast<std::size_t>(g.n));
    dist[static_cast<std::size_t>(src)] = 0;
    q.push_back(src);
    for (std::size_t h = 0; h < q.size(); ++h) {
        int u = q[h];
        int du = dist[static_cast<std::size_t>(u)];
        for (int v : g.adj[static_cast<std::size_t>(u)]) {
            if (dist[static_cast<std::size_t>(v)] == kUnreachable) {
                dist[static_cast<std::size_t>(v)] = du + 1;
                q.push_back(v);
            }
        }
    }
    return dist;
}

std::vector<int> distances_from_within(const graph& g, int src, const bitrow& allowed) {
    require(src >= 0 && src < g.n, errc::vertex_out_of_range, "BFS source out of range");
    std::vector<int> dist(static_cast<std::size_t>(g.n), kUnreachable);
    std::vector<int> q;
    dist[static_cast<std::size_t>(src)] = 0;
    q.push_back(src);
    for (std::size_t h = 0; h < q.size(); ++h) {
        int u = q[h];
        int du = dist[static_cast<std::size_t>(u)];
        for (int v : g.adj[static_cast<std::size_t>(u)]) {
            if (!allowed.test(v)) continue;
            if (dist[static_cast<std::size_t>(v)] == kUnreachable) {
                dist[static_cast<std::size_t>(v)] = du + 1;
                q.push_back(v);
            }
        }
    }
    return dist;
}

graph graph_power(const graph& g, int r) {
    require(r >= 1, errc::bad_params, "graph power requires r >= 1");
    graph p;
    p.n = g.n;
    p.adj.assign(static_cast<std::size_t>(g.n), {});
    // Depth-limited BFS per vertex; adds each pair from its smaller endpoint.
    std::vector<int> dist(static_cast<std::size_t>(g.n), -1);
    std::vector<int> q;
    for (int s = 0; s < g.n; ++s) {
        q.clear();
        q.push_back(s);
        dist[static_cast<std::size_t>(s)] = 0;
        for (std::size_t h = 0; h < q.size(); ++h) {
            int u = q[h];
            int du = dist[static_cast<std::size_t>(u)];
            if (du == r) continue;
            for (int v : g.adj[static_cast<std::size_t>(u)]) {
                if (dist[static_cast<std::size_t>(v)] == -1) {
                    dist[static_cast<std::size_t>(v)] = du + 1;
                    q.push_back(v);
                }
            }
        }
        for (int u : q)
            if (u != s) {
                p.adj[static_cast<std::size_t>(s)].push_back(u);
            }
        for (int u : q) dist[static_cast<std::size_t>(u)] = -1;
    }
    for (auto& a : p.adj) std::sort(a.begin(), a.end());
    return p;
}

induced_result induced_subgraph(const graph& g, const std::vector<int>& vs) {
    std::vector<int> back(static_cast<std::size_t>(g.n), -1);
    for (std::size_t i = 0; i < vs.size(); ++i) {
        int v = vs[i];
        require(v >= 0 && v < g.n, errc::vertex_out_of_range, "induced vertex out of range");
        require(back[static_cast<std::size_t>(v)] == -1, errc::bad_params, "duplicate vertex in induced set");
        back[static_cast<std::size_t>(v)] = static_cast<int>(i);
    }
    induced_result res;
    res.orig = vs;
    res.g.n = static_cast<int>(vs.size());
    res.g.adj.assign(vs.size(), {});
    for (std::size_t i = 0; i < vs.size(); ++i) {
        for (int w : g.adj[static_cast<std::size_t>(vs[i])]) {
            int j = back[static_cast<std::size_t>(w)];
            if (j != -1) res.g.adj[i].push_back(j);
        }
        std::sort(res.g.adj[i].begin(), res.g.adj[i].end());
    }
    if (!g.layer.empty()) {
        res.g.layer.resize(vs.size());
        for (std::size_t i = 0; i < vs.size(); ++i) res.g.layer[i] = g.layer[static_cast<std::size_t>(vs[i])];
    }
    if (!g.native.empty()) {
        res.g.native.resize(vs.size());
        for (std::size_t i = 0; i < vs.size(); ++i) res.g.native[i] = g.native[static_cast<std::size_t>(vs[i])];
    }
    return res;
}

bool bigraph::has_edge(int a, int b) const {
    const auto& l = adj_a[static_cast<std::size_t>(a)];
    return std::binary_search(l.begin(), l.end(), b);
}

long long bigraph::edge_count() const {
    long long d = 0;
    for (const auto& a : adj_a) d += static_cast<long long>(a.size());
    return d;
}

bigraph make_bigraph(int na, int nb, const std::vector<std::pair<int, int>>& edges) {
    require(na >= 0 && nb >= 0, errc::bad_params, "side sizes must be nonnegative");
    bigraph g;
    g.na = na;
    g.nb = nb;
    g.adj_a.assign(static_cast<std::size_t>(na), {});
    g.adj_b.assign(static_cast<std::size_t>(nb), {});
    for (auto [a, b] : edges) {
        require(a >= 0 && a < na && b >= 0 && b < nb, errc::vertex_out_of_range, "bipartite edge out of range");
        g.adj_a[static_cast<std::size_t>(a)].push_back(b);
        g.adj_b[static_cast<std::size_t>(b)].push_back(a);
    }
    for (auto& l : g.adj_a) {
        std::sort(l.begin(), l.end());
        l.erase(std::unique(l.begin(), l.end()), l.end());
    }
    for (auto& l : g.adj_b) {
        std::sort(l.begin(), l.end());
        l.erase(std::unique(l.begin(), l.end()), l.end());
    }
    return g;
}

bigraph semi_induced(const graph& g, const std::vector<int>& A, const std::vector<int>& B) {
    std::vector<int> pos_a(static_cast<std::size_t>(g.n), -1), pos_b(static_cast<std::size_t>(g.n), -1);
    for (std::size_t i = 0; i < A.size(); ++i) {
        int v = A[i];
        require(v >= 0 && v < g.n, errc::vertex_out_of_range, "A vertex out of range");
        require(pos_a[static_cast<std::size_t>(v)] == -1, errc::bad_params, "duplicate vertex in A");
        pos_a[static_cast<std::size_t>(v)] = static_cast<int>(i);
    }
    for (std::size_t i = 0; i < B.size(); ++i) {
        int v = B[i];
        require(v >= 0 && v < g.n, errc::vertex_out_of_range, "B vertex out of range");
        require(pos_a[static_cast<std::size_t>(v)] == -1, errc::overlapping_sides,
                "vertex " + std::to_string(v) + " appears on both sides");
        require(pos_b[static_cast<std::size_t>(v)] == -1, errc::bad_params, "duplicate vertex in B");
        pos_b[static_cast<std::size_t>(v)] = static_cast<int>(i);
    }
    std::vector<std::pair<int, int>> es;
    for (std::size_t i = 0; i < A.size(); ++i)
        for (int w : g.adj[static_cast<std::size_t>(A[i])]) {
            int j = pos_b[static_cast<std::size_t>(w)];
            if (j != -1) es.emplace_back(static_cast<int>(i), j);
        }
    return make_bigraph(static_cast<int>(A.size()), static_cast<int>(B.size()), es);
}

int weak_diameter(const graph& g, const std::vector<int>& xs) {
    require(!xs.empty(), errc::empty_set, "weak diameter of empty set");
    for (int v : xs) require(v >= 0 && v < g.n, errc::vertex_out_of_range, "diameter vertex out of range");
    if (xs.size() == 1) return 0;
    int best = 0;
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
        auto dist = distances_from(g, xs[i]);
        for (std::size_t j = i + 1; j < xs.size(); ++j) {
            int d = dist[static_cast<std::size_t>(xs[j])];
            if (d == kUnreachable) return kUnreachable;
            best = std::max(best, d);
        }
    }
    return best;
}

std::vector<bitrow> adjacency_rows(const graph& g) {
    std::vector<bitrow> rows(static_cast<std::size_t>(g.n), bitrow(g.n));
    for (int u = 0; u < g.n; ++u)
        for (int v : g.adj[static_cast<std::size_t>(u)]) rows[static_cast<std::size_t>(u)].set(v);
    return rows;
}

graph disjoint_union(const graph& a, const graph& b) {
    graph g;
    g.n = a.n + b.n;
    g.adj.reserve(static_cast<std::size_t>(g.n));
    for (const auto& l : a.adj) g.adj.push_back(l);
    for (const auto& l : b.adj) {
        std::vector<int> shifted;
        shifted.reserve(l.size());
        for (int v : l) shifted.push_back(v + a.n);
        g.adj.push_back(std::move(shifted));
    }
    if (!a.layer.empty() && !b.layer.empty()) {
        g.layer = a.layer;
        g.layer.insert(g.layer.end(), b.layer.begin(), b.layer.end());
    }
    if (!a.native.empty() && !b.native.empty()) {
        g.native = a.native;
        g.native.insert(g.native.end(), b.native.begin(), b.native.end());
    }
    return g;
}

} // namespace flipcover
