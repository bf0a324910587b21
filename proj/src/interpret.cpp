#include "flipcover/interpret.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <string>

#include "flipcover/error.hpp"

namespace flipcover {

encode_variant variant_from_name(const std::string& name) {
    if (name == "biweb") return encode_variant::biweb;
    if (name == "biclique") return encode_variant::biclique;
    fail(errc::bad_params, "unknown encode variant: " + name);
}

const char* variant_name(encode_variant v) {
    return v == encode_variant::biweb ? "biweb" : "biclique";
}

// ---------------------------------------------------------------------------
// canonical_flip

canonical_flip_result canonical_flip(int t, int r, const std::vector<int>& lc_in,
                                     const std::vector<std::pair<int, int>>& R_pairs, encode_variant variant) {
    const int min_r = variant == encode_variant::biweb ? 2 : 1;
    require(t >= 1 && r >= min_r, errc::bad_params, "canonical_flip needs t >= 1 and r >= " + std::to_string(min_r));
    const int ell = r + 2;
    require((int)lc_in.size() == ell, errc::bad_params,
            "layer coloring must assign all " + std::to_string(ell) + " layers");

    int k = 0;
    for (int col : lc_in) {
        require(col >= 0, errc::bad_params, "negative color in layer coloring");
        k = std::max(k, col + 1);
    }
    std::vector<char> seen(k, 0);
    for (int col : lc_in) seen[col] = 1;
    for (int c0 = 0; c0 < k; ++c0)
        require(seen[c0], errc::bad_params, "color " + std::to_string(c0) + " unused by the layer coloring");

    std::vector<std::vector<std::uint8_t>> R(k, std::vector<std::uint8_t>(k, 0));
    for (auto [a, b] : R_pairs) {
        require(a >= 0 && a < k && b >= 0 && b < k, errc::bad_params, "relation pair outside the color range");
        R[a][b] = R[b][a] = 1;
    }

    std::vector<int> lc = lc_in;

    // Merge twin colors (equal relation rows, loops included) until none remain.
    bool merged = true;
    while (merged && k > 1) {
        merged = false;
        for (int i = 0; i < k && !merged; ++i)
            for (int j = i + 1; j < k && !merged; ++j) {
                if (R[i] != R[j]) continue;
                for (int& col : lc) {
                    if (col == j) col = i;
                    if (col > j) --col;
                }
                R.erase(R.begin() + j);
                for (auto& row : R) row.erase(row.begin() + j);
                --k;
                merged = true;
            }
    }

    canonical_flip_result out;
    out.p.variant = variant;
    out.p.r = r;
    out.p.t = t;
    out.p.ell = ell;
    out.p.c = k;
    out.p.lc = lc;
    out.p.R = R;
    out.p.exceptional.push_back(lc[1]);
    if (lc[ell - 2] != lc[1]) out.p.exceptional.push_back(lc[ell - 2]);

    pattern_desc desc;
    desc.kind = variant == encode_variant::biweb ? pattern_kind::biweb : pattern_kind::subdivided_biclique;
    desc.n = t;
    desc.m = t;
    desc.r = r;
    out.p.g = generate_pattern(desc);

    out.flip.k = k;
    out.flip.R = R;
    out.flip.lambda.resize(out.p.g.n);
    for (int v = 0; v < out.p.g.n; ++v) out.flip.lambda[v] = lc[out.p.g.layer[v] - 1];
    out.flipped = apply_flip(out.p.g, out.flip);
    return out;
}

// ---------------------------------------------------------------------------
// encode_graph

encoded_instance encode_graph(const graph& g, int r, int t, encode_variant variant) {
    require(r >= 3 && t >= 5, errc::bad_params, "encoding needs r >= 3 and t >= 5");
    require(g.n >= 1, errc::empty_set, "cannot encode the empty graph");

    const int n = g.n;
    const int ell = r + 2;
    const auto edges = g.edge_list();
    const int m = (int)edges.size();

    // Incident edge slots, lexicographic per endpoint.
    std::vector<std::vector<int>> inc(n);
    std::vector<std::pair<int, int>> slot(m);
    for (int e = 0; e < m; ++e) {
        auto [u, v] = edges[e];
        slot[e] = {(int)inc[u].size(), (int)inc[v].size()};
        inc[u].push_back(e);
        inc[v].push_back(e);
    }

    const bool web = variant == encode_variant::biweb;
    const int block = web ? t + n + r + 2 : t + r + 4;
    const int conn = web ? 2 * r - 2 : 2 * r + 1;
    const int pattern_offset = n * block + m * conn;

    pattern_desc pd;
    pd.kind = web ? pattern_kind::biweb : pattern_kind::subdivided_biclique;
    pd.n = t;
    pd.m = t;
    pd.r = r;
    const graph pat = generate_pattern(pd);

    const int total = pattern_offset + pat.n;
    std::vector<std::pair<int, int>> he;
    std::vector<int> layer(total, 0);
    std::vector<std::uint8_t> native(total, 0);

    encoded_instance out;
    out.r = r;
    out.t = t;
    out.variant = variant;
    out.pattern_offset = pattern_offset;
    out.source_n = n;
    out.anchor.resize(n);

    if (web) {
        for (int v = 0; v < n; ++v) {
            const int base = v * block;
            out.anchor[v] = base;
            // Anchor plus companions form one hop clique; the first deg(v)
            // companions are the connector endpoints, the rest are padding.
            for (int i = 0; i < t + n; ++i) layer[base + i] = 2;
            for (int i = 0; i < t + n; ++i)
                for (int j = i + 1; j < t + n; ++j) he.push_back({base + i, base + j});
            // Tail of length r-1 hanging off the anchor...
            const int k0 = base + t + n; // first tail vertex, layer 3
            for (int i = 0; i < r - 1; ++i) layer[k0 + i] = 3 + i;
            he.push_back({base, k0});
            for (int i = 0; i + 1 < r - 1; ++i) he.push_back({k0 + i, k0 + i + 1});
            // ...ending in a pendant K4 around a far-side native.
            const int kr = k0 + r - 2, b = kr + 1, e1 = b + 1, e2 = b + 2;
            layer[b] = ell;
            layer[e1] = layer[e2] = ell - 1;
            native[b] = 1;
            he.push_back({kr, b});
            he.push_back({kr, e1});
            he.push_back({kr, e2});
            he.push_back({b, e1});
            he.push_back({b, e2});
            he.push_back({e1, e2});
        }
        for (int e = 0; e < m; ++e) {
            auto [u, v] = edges[e];
            const int wu = u * block + 1 + slot[e].first;
            const int wv = v * block + 1 + slot[e].second;
            const int zb = n * block + e * conn;
            for (int p = 0; p < r - 1; ++p) layer[zb + p] = 3 + p;
            for (int q = 0; q < r - 1; ++q) layer[zb + r - 1 + q] = r + 1 - q;
            he.push_back({wu, zb});
            for (int p = 0; p + 1 < conn; ++p) he.push_back({zb + p, zb + p + 1});
            he.push_back({zb + conn - 1, wv});
        }
    } else {
        for (int v = 0; v < n; ++v) {
            const int base = v * block;
            out.anchor[v] = base;
            layer[base] = 1;
            native[base] = 1;
            // t-1 pendant leaves push the anchor's degree to t even when v is
            // isolated in the source graph.
            for (int i = 1; i < t; ++i) {
                layer[base + i] = 2;
                he.push_back({base, base + i});
            }
            // Tail of length r+1 ending in a far-side native with 3 leaves.
            const int k0 = base + t;
            for (int i = 0; i < r; ++i) layer[k0 + i] = 2 + i;
            const int b = base + t + r;
            layer[b] = ell;
            native[b] = 1;
            he.push_back({base, k0});
            for (int i = 0; i + 1 < r; ++i) he.push_back({k0 + i, k0 + i + 1});
            he.push_back({k0 + r - 1, b});
            for (int i = 1; i <= 3; ++i) {
                layer[b + i] = ell - 1;
                he.push_back({b, b + i});
            }
        }
        for (int e = 0; e < m; ++e) {
            auto [u, v] = edges[e];
            const int yb = n * block + e * conn;
            for (int p = 0; p < r; ++p) layer[yb + p] = 2 + p;
            layer[yb + r] = ell;
            native[yb + r] = 1;
            for (int q = 1; q <= r; ++q) layer[yb + r + q] = r + 2 - q;
            he.push_back({u * block, yb});
            for (int p = 0; p + 1 < conn; ++p) he.push_back({yb + p, yb + p + 1});
            he.push_back({yb + conn - 1, v * block});
        }
    }

    for (auto [u, v] : pat.edge_list()) he.push_back({u + pattern_offset, v + pattern_offset});
    for (int v = 0; v < pat.n; ++v) {
        layer[pattern_offset + v] = pat.layer[v];
        native[pattern_offset + v] = pat.native[v];
    }

    out.host = build_graph(total, he);
    out.host.layer = std::move(layer);
    out.host.native = std::move(native);
    return out;
}

// ---------------------------------------------------------------------------
// decode_interpretation

namespace {

// Induced path of exactly len edges from x to any marked vertex.
bool induced_path_to(const graph& h, int x, int len, const std::vector<char>& target) {
    std::vector<int> path{x};
    std::vector<char> on(h.n, 0);
    on[x] = 1;
    std::function<bool(int, int)> go = [&](int v, int depth) -> bool {
        if (depth == len) return target[v] != 0;
        for (int w : h.adj[v]) {
            if (on[w]) continue;
            bool ok = true;
            for (std::size_t i = 0; i + 1 < path.size() && ok; ++i)
                if (h.has_edge(path[i], w)) ok = false;
            if (!ok) continue;
            on[w] = 1;
            path.push_back(w);
            if (go(w, depth + 1)) return true;
            path.pop_back();
            on[w] = 0;
        }
        return false;
    };
    return go(x, 0);
}

std::vector<int> bfs_capped(const graph& h, int src, int cap) {
    std::vector<int> dist(h.n, -1);
    std::queue<int> q;
    dist[src] = 0;
    q.push(src);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        if (dist[v] == cap) continue;
        for (int w : h.adj[v])
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                q.push(w);
            }
    }
    return dist;
}

} // namespace

graph decode_interpretation(const graph& host, int r, int t, encode_variant variant) {
    require(r >= 3 && t >= 5, errc::bad_params, "decoding needs r >= 3 and t >= 5");
    const bool web = variant == encode_variant::biweb;

    std::vector<int> deg(host.n);
    for (int v = 0; v < host.n; ++v) deg[v] = host.degree(v);

    // Pendant landmarks: for the web variant a vertex whose degree-3
    // neighbours contain a triangle, otherwise a vertex with >= 3 leaves.
    std::vector<char> landmark(host.n, 0);
    for (int y = 0; y < host.n; ++y) {
        if (web) {
            std::vector<int> d3;
            for (int w : host.adj[y])
                if (deg[w] == 3) d3.push_back(w);
            bool hit = false;
            for (std::size_t a = 0; a < d3.size() && !hit; ++a)
                for (std::size_t b = a + 1; b < d3.size() && !hit; ++b) {
                    if (!host.has_edge(d3[a], d3[b])) continue;
                    for (std::size_t c = b + 1; c < d3.size() && !hit; ++c)
                        if (host.has_edge(d3[a], d3[c]) && host.has_edge(d3[b], d3[c])) hit = true;
                }
            landmark[y] = hit;
        } else {
            int leaves = 0;
            for (int w : host.adj[y])
                if (deg[w] == 1) ++leaves;
            landmark[y] = leaves >= 3;
        }
    }

    const int tail_len = web ? r - 1 : r + 1;
    std::vector<int> domain;
    for (int v = 0; v < host.n; ++v) {
        const bool heavy = web ? deg[v] > t : deg[v] >= t;
        if (heavy && induced_path_to(host, v, tail_len, landmark)) domain.push_back(v);
    }

    const int reach = web ? 2 * r + 1 : 2 * r + 2;
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < domain.size(); ++i) {
        auto dist = bfs_capped(host, domain[i], reach);
        for (std::size_t j = i + 1; j < domain.size(); ++j)
            if (dist[domain[j]] >= 0) edges.push_back({(int)i, (int)j});
    }
    return build_graph((int)domain.size(), edges);
}

// ---------------------------------------------------------------------------
// probes

probe_sets select_probes(const layered_pattern& p, int s, bool paper_scale) {
    require(s >= 3 && s % 2 == 1, errc::bad_params, "probe width must be an odd number >= 3");
    const int c = p.c;
    require((long long)p.t >= (long long)c * s * s, errc::parameter_too_small,
            "pattern order " + std::to_string(p.t) + " below " + std::to_string(c) + "*" + std::to_string(s) + "^2");
    if (paper_scale)
        require(s >= 8 * c * p.ell, errc::parameter_too_small, "probe width below 8*c*layers");

    const int T = p.t, r = p.r, s2 = s * s;
    auto qid = [&](int a, int b, int q) { return 2 * T + (a * T + b) * r + (q - 1); };

    probe_sets out;
    out.s = s;
    out.W.assign(c, {});
    for (int i = 0; i < c; ++i) {
        auto& W = out.W[i];
        W.reserve(s2);
        const int a0 = i * s2, b0 = i * s2; // block copy i, both sides
        const bool hop_lo = p.lc[1] == i, hop_hi = p.lc[p.ell - 2] == i;
        if (hop_lo || hop_hi) {
            // s vertices out of each of s distinct cones, so no vertex of the
            // ambient graph is adjacent to more than s probes of this color.
            for (int k = 0; k < s; ++k)
                for (int x = 0; x < s; ++x)
                    W.push_back(hop_lo ? qid(a0 + k, b0 + x, 1) : qid(a0 + x, b0 + k, r));
        } else {
            int lay = 0;
            for (int l = 1; l <= p.ell; ++l)
                if (p.lc[l - 1] == i) {
                    lay = l;
                    break;
                }
            if (lay == 1) {
                for (int x = 0; x < s2; ++x) W.push_back(a0 + x);
            } else if (lay == p.ell) {
                for (int x = 0; x < s2; ++x) W.push_back(T + b0 + x);
            } else {
                // Interior layer: one vertex from each of s^2 distinct paths.
                for (int x = 0; x < s; ++x)
                    for (int y = 0; y < s; ++y) W.push_back(qid(a0 + x, b0 + y, lay - 1));
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// dense form

dense_graph to_dense(const graph& g) {
    dense_graph d;
    d.n = g.n;
    d.rows.assign(g.n, bitrow(g.n));
    for (int v = 0; v < g.n; ++v)
        for (int w : g.adj[v]) d.rows[v].set(w);
    d.layer = g.layer;
    return d;
}

graph from_dense(const dense_graph& d) {
    graph g;
    g.n = d.n;
    g.adj.resize(d.n);
    for (int v = 0; v < d.n; ++v) {
        g.adj[v].reserve(d.rows[v].count());
        d.rows[v].for_each([&](int w) { g.adj[v].push_back(w); });
    }
    g.layer = d.layer;
    return g;
}

dense_graph apply_flip_dense(const dense_graph& g, const flip_spec& f) {
    require((int)f.lambda.size() == g.n, errc::bad_params, "flip coloring does not match the vertex count");
    require((int)f.R.size() == f.k, errc::bad_params, "flip relation has the wrong order");
    for (int a = 0; a < f.k; ++a) {
        require((int)f.R[a].size() == f.k, errc::bad_params, "flip relation is not square");
        for (int b = 0; b < a; ++b)
            require(f.R[a][b] == f.R[b][a], errc::asymmetric_relation,
                    "relation disagrees on (" + std::to_string(a) + "," + std::to_string(b) + ")");
    }

    std::vector<bitrow> cls(f.k, bitrow(g.n));
    for (int v = 0; v < g.n; ++v) {
        int col = f.lambda[v];
        require(col >= 0 && col < f.k, errc::bad_params, "vertex color outside the flip relation");
        cls[col].set(v);
    }
    std::vector<bitrow> mask(f.k, bitrow(g.n));
    for (int a = 0; a < f.k; ++a)
        for (int b = 0; b < f.k; ++b)
            if (f.R[a][b]) mask[a].or_with(cls[b]);

    dense_graph out;
    out.n = g.n;
    out.layer = g.layer;
    out.rows = g.rows;
    for (int v = 0; v < g.n; ++v) {
        out.rows[v].xor_with(mask[f.lambda[v]]);
        out.rows[v].reset(v); // flips never create loops
    }
    return out;
}

// ---------------------------------------------------------------------------
// reading colors back out of a flipped graph

namespace {

// Per-vertex color prediction: which probe sets does v see a majority of?
// Returns the color whose relation row matches, or -1.
struct probe_reader {
    std::vector<bitrow> mask;
    std::vector<bitrow> nrow; // relation row per color, over c bits
    int c, s2;

    probe_reader(const dense_graph& g, const std::vector<std::vector<int>>& probes, const layered_pattern& p)
        : c(p.c) {
        require((int)probes.size() == c, errc::bad_params, "need one probe set per color");
        s2 = (int)probes[0].size();
        require(s2 % 2 == 1, errc::bad_params, "probe sets must have odd size");
        mask.assign(c, bitrow(g.n));
        for (int j = 0; j < c; ++j) {
            require((int)probes[j].size() == s2, errc::bad_params, "probe sets must share one size");
            for (int v : probes[j]) {
                require(v >= 0 && v < g.n, errc::vertex_out_of_range,
                        "probe vertex " + std::to_string(v) + " outside the graph");
                mask[j].set(v);
            }
        }
        nrow.assign(c, bitrow(c));
        for (int i = 0; i < c; ++i)
            for (int j = 0; j < c; ++j)
                if (p.R[i][j]) nrow[i].set(j);
    }

    int predict(const bitrow& row) const {
        bitrow sv(c);
        for (int j = 0; j < c; ++j)
            if (2 * (long long)row.count_and(mask[j]) > s2) sv.set(j);
        for (int i = 0; i < c; ++i)
            if (nrow[i] == sv) return i;
        return -1;
    }
};

} // namespace

popular_result popular_function(const dense_graph& flipped, const std::vector<std::vector<int>>& A_sets,
                                const std::vector<std::vector<int>>& probe_abs, const layered_pattern& p) {
    const int c = p.c;
    require((int)A_sets.size() == c, errc::bad_params, "need one voting set per color");
    probe_reader reader(flipped, probe_abs, p);

    popular_result out;
    out.f.assign(c, -1);
    out.counts.assign(c, std::vector<long long>(c, 0));
    for (int i = 0; i < c; ++i) {
        for (int v : A_sets[i]) {
            require(v >= 0 && v < flipped.n, errc::vertex_out_of_range, "voter outside the graph");
            int col = reader.predict(flipped.rows[v]);
            if (col >= 0) ++out.counts[i][col];
        }
        long long best = -1;
        int arg = -1, ties = 0;
        for (int j = 0; j < c; ++j) {
            if (out.counts[i][j] > best) {
                best = out.counts[i][j];
                arg = j;
                ties = 1;
            } else if (out.counts[i][j] == best) {
                ++ties;
            }
        }
        require(ties == 1 && best * 4 * c >= (long long)A_sets[i].size(), errc::not_popular,
                "no color reaches a clear plurality for set " + std::to_string(i));
        out.f[i] = arg;
    }

    std::vector<char> hit(c, 0);
    for (int i = 0; i < c; ++i) {
        require(!hit[out.f[i]], errc::not_automorphism, "popular map is not injective");
        hit[out.f[i]] = 1;
    }
    for (int i = 0; i < c; ++i)
        for (int j = 0; j < c; ++j)
            require(p.R[i][j] == p.R[out.f[i]][out.f[j]], errc::not_automorphism,
                    "popular map does not preserve the relation");
    return out;
}

dense_graph decode_flip(const dense_graph& flipped, const probe_sets& probes, int probe_offset,
                        const layered_pattern& p) {
    require((int)probes.W.size() == p.c, errc::bad_params, "probe sets do not match the color count");
    std::vector<std::vector<int>> abs(p.c);
    for (int j = 0; j < p.c; ++j) {
        abs[j].reserve(probes.W[j].size());
        for (int v : probes.W[j]) abs[j].push_back(v + probe_offset);
    }
    probe_reader reader(flipped, abs, p);

    flip_spec fs;
    fs.k = p.c;
    fs.R = p.R;
    fs.lambda.resize(flipped.n);
    for (int v = 0; v < flipped.n; ++v) {
        int col = reader.predict(flipped.rows[v]);
        require(col >= 0, errc::color_undetermined,
                "vertex " + std::to_string(v) + " matches no color's relation row");
        fs.lambda[v] = col;
    }
    return apply_flip_dense(flipped, fs);
}

} // namespace flipcover
