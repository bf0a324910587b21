#include "flipcover/patterns.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "flipcover/error.hpp"
#include "flipcover/isomorphism.hpp"

namespace flipcover {

pattern_kind pattern_kind_from_name(const std::string& name) {
    if (name == "half_graph") return pattern_kind::half_graph;
    if (name == "subdivided_clique") return pattern_kind::subdivided_clique;
    if (name == "web") return pattern_kind::web;
    if (name == "biweb") return pattern_kind::biweb;
    if (name == "subdivided_biclique") return pattern_kind::subdivided_biclique;
    if (name == "rook") return pattern_kind::rook;
    fail(errc::bad_params, "unknown pattern kind '" + name + "'");
}

const char* pattern_kind_name(pattern_kind k) {
    switch (k) {
    case pattern_kind::half_graph: return "half_graph";
    case pattern_kind::subdivided_clique: return "subdivided_clique";
    case pattern_kind::web: return "web";
    case pattern_kind::biweb: return "biweb";
    case pattern_kind::subdivided_biclique: return "subdivided_biclique";
    case pattern_kind::rook: return "rook";
    }
    fail(errc::bad_params, "bad pattern kind");
}

namespace {

graph make_half_graph(int n) {
    require(n >= 1, errc::bad_params, "half graph needs n >= 1");
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) es.emplace_back(i, n + j);
    return build_graph(2 * n, es);
}

// Shared skeleton for the one-sided subdivided kinds: natives 0..n-1, then r
// internals per native pair in lex order.  with_cones adds a clique on each
// native's path-neighborhood.
graph make_subdivided_clique(int n, int r, bool with_cones) {
    require(n >= 1, errc::bad_params, "clique subdivision needs n >= 1");
    require(r >= (with_cones ? 2 : 1), errc::bad_params,
            with_cones ? "webs need r >= 2" : "subdivision needs r >= 1");
    int total = n + r * (n * (n - 1) / 2);
    std::vector<std::pair<int, int>> es;
    std::vector<std::vector<int>> first_hop(static_cast<std::size_t>(n)); // native -> adjacent internals
    int next = n;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            int prev = i;
            int start = next;
            for (int p = 0; p < r; ++p) {
                es.emplace_back(prev, next);
                prev = next;
                ++next;
            }
            es.emplace_back(prev, j);
            first_hop[static_cast<std::size_t>(i)].push_back(start);
            first_hop[static_cast<std::size_t>(j)].push_back(start + r - 1);
        }
    if (with_cones)
        for (int v = 0; v < n; ++v) {
            const auto& hop = first_hop[static_cast<std::size_t>(v)];
            for (std::size_t x = 0; x < hop.size(); ++x)
                for (std::size_t y = x + 1; y < hop.size(); ++y) es.emplace_back(hop[x], hop[y]);
        }
    return build_graph(total, es);
}

graph make_subdivided_biclique(int n, int m, int r, bool with_cones) {
    require(n >= 1 && m >= 1, errc::bad_params, "two-sided patterns need n, m >= 1");
    require(r >= (with_cones ? 2 : 1), errc::bad_params,
            with_cones ? "biwebs need r >= 2" : "subdivision needs r >= 1");
    int total = n + m + r * n * m;
    std::vector<std::pair<int, int>> es;
    std::vector<std::vector<int>> hop_a(static_cast<std::size_t>(n)), hop_b(static_cast<std::size_t>(m));
    graph g;
    g.layer.assign(static_cast<std::size_t>(total), 0);
    g.native.assign(static_cast<std::size_t>(total), 0);
    const int ell = r + 2;
    for (int i = 0; i < n; ++i) {
        g.layer[static_cast<std::size_t>(i)] = 1;
        g.native[static_cast<std::size_t>(i)] = 1;
    }
    for (int j = 0; j < m; ++j) {
        g.layer[static_cast<std::size_t>(n + j)] = ell;
        g.native[static_cast<std::size_t>(n + j)] = 1;
    }
    int next = n + m;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) {
            int prev = i;
            for (int p = 0; p < r; ++p) {
                es.emplace_back(prev, next);
                g.layer[static_cast<std::size_t>(next)] = p + 2;
                prev = next;
                ++next;
            }
            es.emplace_back(prev, n + j);
            hop_a[static_cast<std::size_t>(i)].push_back(next - r);
            hop_b[static_cast<std::size_t>(j)].push_back(next - 1);
        }
    if (with_cones) {
        for (const auto& hops : {hop_a, hop_b})
            for (const auto& hop : hops)
                for (std::size_t x = 0; x < hop.size(); ++x)
                    for (std::size_t y = x + 1; y < hop.size(); ++y) es.emplace_back(hop[x], hop[y]);
    }
    graph built = build_graph(total, es);
    built.layer = std::move(g.layer);
    built.native = std::move(g.native);
    return built;
}

graph make_rook(int n) {
    require(n >= 1, errc::bad_params, "rook graph needs n >= 1");
    std::vector<std::pair<int, int>> es;
    auto id = [n](int i, int j) { return i * n + j; };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            for (int j2 = j + 1; j2 < n; ++j2) es.emplace_back(id(i, j), id(i, j2));
            for (int i2 = i + 1; i2 < n; ++i2) es.emplace_back(id(i, j), id(i2, j));
        }
    return build_graph(n * n, es);
}

} // namespace

graph generate_pattern(const pattern_desc& d) {
    switch (d.kind) {
    case pattern_kind::half_graph: return make_half_graph(d.n);
    case pattern_kind::subdivided_clique: return make_subdivided_clique(d.n, d.r, false);
    case pattern_kind::web: return make_subdivided_clique(d.n, d.r, true);
    case pattern_kind::biweb: return make_subdivided_biclique(d.n, d.m > 0 ? d.m : d.n, d.r, true);
    case pattern_kind::subdivided_biclique:
        return make_subdivided_biclique(d.n, d.m > 0 ? d.m : d.n, d.r, false);
    case pattern_kind::rook: return make_rook(d.n);
    }
    fail(errc::bad_params, "bad pattern kind");
}

flip_spec make_flip_spec(int k, std::vector<int> lambda, const std::vector<std::pair<int, int>>& pairs) {
    require(k >= 1, errc::bad_params, "flip needs k >= 1 classes");
    flip_spec f;
    f.k = k;
    f.lambda = std::move(lambda);
    for (int c : f.lambda) require(c >= 0 && c < k, errc::bad_params, "lambda value outside [0,k)");
    f.R.assign(static_cast<std::size_t>(k), std::vector<std::uint8_t>(static_cast<std::size_t>(k), 0));
    for (auto [i, j] : pairs) {
        require(i >= 0 && i < k && j >= 0 && j < k, errc::bad_params, "relation pair outside [0,k)");
        f.R[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 1;
        f.R[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = 1;
    }
    return f;
}

graph apply_flip(const graph& g, const flip_spec& f) {
    require(static_cast<int>(f.lambda.size()) == g.n, errc::bad_params, "lambda size does not match graph");
    require(static_cast<int>(f.R.size()) == f.k, errc::bad_params, "R must be k x k");
    for (const auto& row : f.R)
        require(static_cast<int>(row.size()) == f.k, errc::bad_params, "R must be k x k");
    for (int i = 0; i < f.k; ++i)
        for (int j = i + 1; j < f.k; ++j)
            require(f.R[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] ==
                        f.R[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)],
                    errc::asymmetric_relation,
                    "R(" + std::to_string(i) + "," + std::to_string(j) + ") != R(" + std::to_string(j) + "," +
                        std::to_string(i) + ")");
    for (int c : f.lambda) require(c >= 0 && c < f.k, errc::bad_params, "lambda value outside [0,k)");

    std::vector<bitrow> class_mask(static_cast<std::size_t>(f.k), bitrow(g.n));
    for (int v = 0; v < g.n; ++v) class_mask[static_cast<std::size_t>(f.lambda[static_cast<std::size_t>(v)])].set(v);
    std::vector<bitrow> flip_mask(static_cast<std::size_t>(f.k), bitrow(g.n));
    for (int c = 0; c < f.k; ++c)
        for (int c2 = 0; c2 < f.k; ++c2)
            if (f.R[static_cast<std::size_t>(c)][static_cast<std::size_t>(c2)])
                flip_mask[static_cast<std::size_t>(c)].or_with(class_mask[static_cast<std::size_t>(c2)]);

    auto rows = adjacency_rows(g);
    graph out;
    out.n = g.n;
    out.adj.assign(static_cast<std::size_t>(g.n), {});
    for (int v = 0; v < g.n; ++v) {
        bitrow row = rows[static_cast<std::size_t>(v)];
        row.xor_with(flip_mask[static_cast<std::size_t>(f.lambda[static_cast<std::size_t>(v)])]);
        row.reset(v); // flips never create loops
        out.adj[static_cast<std::size_t>(v)] = row.to_vector();
    }
    out.layer = g.layer;
    out.native = g.native;
    return out;
}

rook_embedding_result rook_web_embedding(int n) {
    require(n >= 2, errc::bad_params, "rook-web embedding needs n >= 2");
    const int side = n * n; // grid [side] x [side]
    require(1 + n * (n - 1) / 2 <= side, errc::bad_params, "not enough rows for the pair injection");
    graph rook = make_rook(side);
    auto id = [side](int row, int col) { return row * side + col; };

    rook_embedding_result res;
    // Complement inside the first row only: kills the clique on the natives.
    std::vector<int> lambda(static_cast<std::size_t>(rook.n), 0);
    for (int c = 0; c < side; ++c) lambda[static_cast<std::size_t>(id(0, c))] = 1;
    res.flip = make_flip_spec(2, std::move(lambda), {{1, 1}});
    res.flipped = apply_flip(rook, res.flip);

    for (int i = 0; i < n; ++i) res.selected.push_back(id(0, i));
    int row = 1; // row f({i,j}) hosts the two subdivision vertices of that pair
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            res.selected.push_back(id(row, i));
            res.selected.push_back(id(row, j));
            ++row;
        }
    res.induced = induced_subgraph(res.flipped, res.selected).g;

    graph target = generate_pattern({pattern_kind::web, n, 0, 2});
    auto iso = are_isomorphic(res.induced, target);
    require(iso.has_value(), errc::bad_params, "embedding failed to produce the order-2 web");
    res.iso = *iso;
    return res;
}

std::optional<std::vector<int>> ramsey_find_clique(int n, const std::vector<std::vector<int>>& edge_color,
                                                   int target) {
    require(n <= 18, errc::size_limit_exceeded, "clique search capped at 18 vertices");
    require(static_cast<int>(edge_color.size()) == n, errc::bad_params, "edge_color must be n x n");
    require(target >= 1, errc::bad_params, "clique target must be positive");
    if (target == 1) {
        if (n < 1) return std::nullopt;
        return std::vector<int>{0};
    }

    std::unordered_set<int> colors;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) colors.insert(edge_color[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);

    std::vector<int> cur;
    std::function<bool(int, int)> grow = [&](int start, int color) {
        if (static_cast<int>(cur.size()) == target) return true;
        for (int v = start; v < n; ++v) {
            bool ok = true;
            for (int u : cur)
                if (edge_color[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] != color) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            cur.push_back(v);
            if (grow(v + 1, color)) return true;
            cur.pop_back();
        }
        return false;
    };
    for (int color : colors) {
        cur.clear();
        if (grow(0, color)) return cur;
    }
    return std::nullopt;
}

std::optional<std::pair<std::vector<int>, std::vector<int>>>
ramsey_find_biclique(int na, int nb, const std::vector<std::vector<int>>& color, int target) {
    require(na <= 12 && nb <= 12, errc::size_limit_exceeded, "biclique search capped at 12 per side");
    require(static_cast<int>(color.size()) == na, errc::bad_params, "color must be na x nb");
    require(target >= 1, errc::bad_params, "biclique target must be positive");

    std::vector<int> idx;
    std::function<std::optional<std::pair<std::vector<int>, std::vector<int>>>(int)> pick =
        [&](int start) -> std::optional<std::pair<std::vector<int>, std::vector<int>>> {
        if (static_cast<int>(idx.size()) == target) {
            // Rows constant-colored across the chosen columns, grouped by color.
            std::unordered_map<int, std::vector<int>> rows_by_color;
            for (int b = 0; b < nb; ++b) {
                int c = color[static_cast<std::size_t>(idx[0])][static_cast<std::size_t>(b)];
                bool uniform = true;
                for (int a : idx)
                    if (color[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] != c) {
                        uniform = false;
                        break;
                    }
                if (uniform) {
                    auto& lst = rows_by_color[c];
                    lst.push_back(b);
                    if (static_cast<int>(lst.size()) == target) return std::make_pair(idx, lst);
                }
            }
            return std::nullopt;
        }
        for (int a = start; a < na; ++a) {
            idx.push_back(a);
            if (auto got = pick(a + 1)) return got;
            idx.pop_back();
        }
        return std::nullopt;
    };
    return pick(0);
}

namespace {

int otp(int x, int y) { return x < y ? -1 : (x == y ? 0 : 1); }

bool grid_homogeneous(const std::vector<int>& i1, const std::vector<int>& i2, int n,
                      const std::vector<std::vector<int>>& color) {
    // atp -> color map, discovered on the fly; 3x3 order-type grid.
    int seen[3][3];
    for (auto& row : seen)
        for (auto& x : row) x = -2; // -2 = unset
    auto pid = [n](int r, int c) { return r * n + c; };
    for (int r1 : i1)
        for (int c1 : i2)
            for (int r2 : i1)
                for (int c2 : i2) {
                    if (r1 == r2 && c1 == c2) continue;
                    int a = otp(r1, r2) + 1, b = otp(c1, c2) + 1;
                    int col = color[static_cast<std::size_t>(pid(r1, c1))][static_cast<std::size_t>(pid(r2, c2))];
                    if (seen[a][b] == -2)
                        seen[a][b] = col;
                    else if (seen[a][b] != col)
                        return false;
                }
    return true;
}

} // namespace

std::optional<std::pair<std::vector<int>, std::vector<int>>>
ramsey_find_grid(int n, const std::vector<std::vector<int>>& color, int target) {
    require(n <= 5, errc::size_limit_exceeded, "grid search capped at side 5");
    require(static_cast<int>(color.size()) == n * n, errc::bad_params, "color must be n^2 x n^2");
    require(target >= 1 && target <= n, errc::bad_params, "grid target must be in [1, n]");

    std::vector<int> i1, i2;
    std::function<bool(std::vector<int>&, int, int)> choose = [&](std::vector<int>& out, int start,
                                                                  int depth) -> bool {
        if (depth == target) {
            if (&out == &i1) {
                std::vector<int> second;
                return choose(second, 0, 0) ? (i2 = second, true) : false;
            }
            return grid_homogeneous(i1, out, n, color);
        }
        for (int v = start; v < n; ++v) {
            out.push_back(v);
            if (choose(out, v + 1, depth + 1)) return true;
            out.pop_back();
        }
        return false;
    };
    if (choose(i1, 0, 0)) return std::make_pair(i1, i2);
    return std::nullopt;
}

rocket_check verify_rocket_witness(const graph& g, const rocket_witness& w) {
    require(w.rho >= 1, errc::bad_params, "rho must be >= 1");
    require(w.B.size() == w.C.size(), errc::bad_params, "B and C group counts differ");
    std::vector<char> seen(static_cast<std::size_t>(g.n), 0);
    auto claim = [&](int v, const char* who) {
        require(v >= 0 && v < g.n, errc::vertex_out_of_range, std::string(who) + " vertex out of range");
        require(!seen[static_cast<std::size_t>(v)], errc::bad_params, std::string(who) + " vertices overlap");
        seen[static_cast<std::size_t>(v)] = 1;
    };
    for (int v : w.A) claim(v, "A");
    for (std::size_t i = 0; i < w.B.size(); ++i) {
        for (int v : w.B[i]) claim(v, "B");
        for (int v : w.C[i])
            require(std::find(w.B[i].begin(), w.B[i].end(), v) != w.B[i].end(), errc::bad_params,
                    "C must be a subset of its B group");
    }

    graph h = apply_flip(g, w.flip);
    rocket_check res;
    auto violation = [&](std::string s) {
        res.ok = false;
        res.violations.push_back(std::move(s));
    };

    for (std::size_t i = 0; i < w.B.size(); ++i) {
        const auto& Ci = w.C[i];
        // (1) cross edges A <-> C_i form a perfect matching
        if (Ci.size() != w.A.size())
            violation("R.1: |C_" + std::to_string(i) + "| != |A|");
        for (int a : w.A) {
            int deg = 0;
            for (int c : Ci) deg += h.has_edge(a, c) ? 1 : 0;
            if (deg != 1) violation("R.1: A vertex " + std::to_string(a) + " has " + std::to_string(deg) +
                                    " neighbors in C_" + std::to_string(i));
        }
        for (int c : Ci) {
            int deg = 0;
            for (int a : w.A) deg += h.has_edge(a, c) ? 1 : 0;
            if (deg != 1) violation("R.1: C vertex " + std::to_string(c) + " has " + std::to_string(deg) +
                                    " neighbors in A");
        }

        std::vector<int> rest; // B_i minus C_i
        for (int v : w.B[i])
            if (std::find(Ci.begin(), Ci.end(), v) == Ci.end()) rest.push_back(v);

        // (2) no A edges into the interior
        for (int a : w.A)
            for (int v : rest)
                if (h.has_edge(a, v))
                    violation("R.2: edge " + std::to_string(a) + "-" + std::to_string(v));

        // (3) interiors see no other petal
        for (std::size_t j = 0; j < w.B.size(); ++j) {
            if (i == j) continue;
            for (int v : rest)
                for (int u : w.B[j])
                    if (h.has_edge(v, u))
                        violation("R.3: edge " + std::to_string(v) + "-" + std::to_string(u));
        }

        // (4) C_i pairs joined through the interior at distance in [2, rho]
        bitrow allowed(g.n);
        for (int v : rest) allowed.set(v);
        for (std::size_t x = 0; x < Ci.size(); ++x)
            for (std::size_t y = x + 1; y < Ci.size(); ++y) {
                bitrow mask = allowed;
                mask.set(Ci[x]);
                mask.set(Ci[y]);
                auto dist = distances_from_within(h, Ci[x], mask);
                int d = dist[static_cast<std::size_t>(Ci[y])];
                if (d < 2 || d > w.rho)
                    violation("R.4: C_" + std::to_string(i) + " pair " + std::to_string(Ci[x]) + "," +
                              std::to_string(Ci[y]) + " at distance " +
                              (d == kUnreachable ? std::string("inf") : std::to_string(d)));
            }
    }
    return res;
}

int count_iso_classes(const std::function<graph(int)>& host_of, int n, int max_host, long long subset_budget) {
    require(n >= 1 && n <= 7, errc::size_limit_exceeded, "induced-class counting capped at 7 vertices");

    auto count_in = [&](const graph& host) -> int {
        require(host.n >= n, errc::bad_params, "host smaller than n");
        double combos = 1;
        for (int i = 0; i < n; ++i) combos = combos * (host.n - i) / (i + 1);
        require(combos <= static_cast<double>(subset_budget), errc::size_limit_exceeded,
                "subset enumeration over budget");
        std::unordered_set<canon_key, canon_key_hash> classes;
        std::vector<int> pick(static_cast<std::size_t>(n));
        std::function<void(int, int)> rec = [&](int start, int depth) {
            if (depth == n) {
                classes.insert(canonical_form(induced_subgraph(host, pick).g));
                return;
            }
            for (int v = start; v <= host.n - (n - depth); ++v) {
                pick[static_cast<std::size_t>(depth)] = v;
                rec(v + 1, depth + 1);
            }
        };
        rec(0, 0);
        return static_cast<int>(classes.size());
    };

    int prev = -1;
    for (int h = n; h <= max_host; ++h) {
        graph host = host_of(h);
        if (host.n < n) continue;
        int c = count_in(host);
        if (c == prev) return c;
        prev = c;
    }
    fail(errc::size_limit_exceeded, "iso-class count did not stabilize within max_host");
}

} // namespace flipcover
