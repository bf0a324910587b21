#include "flipcover/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "flipcover/error.hpp"

namespace flipcover {

namespace {

using sig_t = std::vector<int>;

sig_t vertex_sig(const graph& g, const std::vector<int>& col, int v) {
    sig_t s;
    const auto& nb = g.adj[static_cast<std::size_t>(v)];
    s.reserve(nb.size() + 1);
    s.push_back(col[static_cast<std::size_t>(v)]);
    for (int w : nb) s.push_back(col[static_cast<std::size_t>(w)]);
    std::sort(s.begin() + 1, s.end());
    return s;
}

// One joint refinement pass over both graphs (h may be empty).  Signatures
// from both share one rank space so colors stay comparable across graphs.
bool refine_pass(const graph& g, const graph& h, std::vector<int>& cg, std::vector<int>& ch) {
    std::map<sig_t, int> ranks;
    std::vector<sig_t> sg(static_cast<std::size_t>(g.n)), sh(static_cast<std::size_t>(h.n));
    for (int v = 0; v < g.n; ++v) {
        sg[static_cast<std::size_t>(v)] = vertex_sig(g, cg, v);
        ranks.emplace(sg[static_cast<std::size_t>(v)], 0);
    }
    for (int v = 0; v < h.n; ++v) {
        sh[static_cast<std::size_t>(v)] = vertex_sig(h, ch, v);
        ranks.emplace(sh[static_cast<std::size_t>(v)], 0);
    }
    int next = 0;
    for (auto& [sig, r] : ranks) r = next++;
    bool changed = false;
    for (int v = 0; v < g.n; ++v) {
        int c = ranks[sg[static_cast<std::size_t>(v)]];
        if (c != cg[static_cast<std::size_t>(v)]) changed = true;
        cg[static_cast<std::size_t>(v)] = c;
    }
    for (int v = 0; v < h.n; ++v) {
        int c = ranks[sh[static_cast<std::size_t>(v)]];
        if (c != ch[static_cast<std::size_t>(v)]) changed = true;
        ch[static_cast<std::size_t>(v)] = c;
    }
    return changed;
}

void refine_to_fixpoint(const graph& g, const graph& h, std::vector<int>& cg, std::vector<int>& ch) {
    cg.assign(static_cast<std::size_t>(g.n), 0);
    ch.assign(static_cast<std::size_t>(h.n), 0);
    int guard = g.n + h.n + 2;
    while (refine_pass(g, h, cg, ch) && guard-- > 0) {
    }
}

struct mapper {
    const graph& g;
    const graph& h;
    const std::vector<int>& cg;
    const std::vector<int>& ch;
    std::vector<int> order;       // g-vertices, most constrained class first
    std::vector<int> map_gh;      // g vertex -> h vertex or -1
    std::vector<std::vector<int>> h_by_color;
    std::vector<bool> used_h;

    bool extend(std::size_t idx) {
        if (idx == order.size()) return true;
        int v = order[idx];
        int col = cg[static_cast<std::size_t>(v)];
        if (col >= static_cast<int>(h_by_color.size())) return false;
        for (int w : h_by_color[static_cast<std::size_t>(col)]) {
            if (used_h[static_cast<std::size_t>(w)]) continue;
            bool ok = true;
            for (int u : g.adj[static_cast<std::size_t>(v)]) {
                int mu = map_gh[static_cast<std::size_t>(u)];
                if (mu != -1 && !h.has_edge(w, mu)) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                // Non-adjacency must be preserved too: every already-mapped
                // h-neighbor of w must come from a g-neighbor of v.
                int mapped_nbrs = 0;
                for (int u : g.adj[static_cast<std::size_t>(v)])
                    if (map_gh[static_cast<std::size_t>(u)] != -1) ++mapped_nbrs;
                int w_mapped_nbrs = 0;
                for (int x : h.adj[static_cast<std::size_t>(w)])
                    if (used_h[static_cast<std::size_t>(x)]) ++w_mapped_nbrs;
                if (mapped_nbrs != w_mapped_nbrs) ok = false;
            }
            if (!ok) continue;
            map_gh[static_cast<std::size_t>(v)] = w;
            used_h[static_cast<std::size_t>(w)] = true;
            if (extend(idx + 1)) return true;
            map_gh[static_cast<std::size_t>(v)] = -1;
            used_h[static_cast<std::size_t>(w)] = false;
        }
        return false;
    }
};

} // namespace

std::vector<int> refinement_colors(const graph& g) {
    graph empty;
    std::vector<int> cg, ch;
    refine_to_fixpoint(g, empty, cg, ch);
    return cg;
}

std::optional<std::vector<int>> are_isomorphic(const graph& g, const graph& h, const iso_options& opt) {
    require(g.n <= opt.max_n && h.n <= opt.max_n, errc::size_limit_exceeded,
            "isomorphism test capped at " + std::to_string(opt.max_n) + " vertices");
    if (g.n != h.n || g.edge_count() != h.edge_count()) return std::nullopt;
    if (g.n == 0) return std::vector<int>{};

    std::vector<int> cg, ch;
    refine_to_fixpoint(g, h, cg, ch);

    // Class size histograms must agree.
    std::map<int, int> hist_g, hist_h;
    for (int c : cg) hist_g[c]++;
    for (int c : ch) hist_h[c]++;
    if (hist_g != hist_h) return std::nullopt;

    int ncol = 0;
    for (int c : cg) ncol = std::max(ncol, c + 1);
    for (int c : ch) ncol = std::max(ncol, c + 1);

    mapper m{g, h, cg, ch, {}, {}, {}, {}};
    m.map_gh.assign(static_cast<std::size_t>(g.n), -1);
    m.used_h.assign(static_cast<std::size_t>(h.n), false);
    m.h_by_color.assign(static_cast<std::size_t>(ncol), {});
    for (int w = 0; w < h.n; ++w) m.h_by_color[static_cast<std::size_t>(ch[static_cast<std::size_t>(w)])].push_back(w);

    m.order.resize(static_cast<std::size_t>(g.n));
    std::iota(m.order.begin(), m.order.end(), 0);
    std::sort(m.order.begin(), m.order.end(), [&](int a, int b) {
        int ca = cg[static_cast<std::size_t>(a)], cb = cg[static_cast<std::size_t>(b)];
        if (hist_g[ca] != hist_g[cb]) return hist_g[ca] < hist_g[cb];
        if (ca != cb) return ca < cb;
        return a < b;
    });

    if (!m.extend(0)) return std::nullopt;
    return m.map_gh;
}

namespace {

// Minimal-adjacency-row search.  Invariant on entering level p: the rows of
// the current partial placement equal best[0..p-1].  A strictly smaller row
// overwrites best[p] and resets the tail to the max sentinel, which keeps the
// invariant and makes fresh per-level comparisons sound even after deeper
// levels replace parts of best.  Every branch completes (the only placement
// rule is the color constraint), so an overwritten tail always gets filled.
struct canon_searcher {
    const graph& g;
    const std::vector<int>& col;
    std::vector<int> placed;
    std::vector<std::uint64_t> best;
    std::uint64_t used = 0;

    void dfs(int p) {
        const int n = g.n;
        if (p == n) return;
        int min_col = -1;
        for (int v = 0; v < n; ++v)
            if (!((used >> v) & 1)) {
                int c = col[static_cast<std::size_t>(v)];
                if (min_col == -1 || c < min_col) min_col = c;
            }
        for (int v = 0; v < n; ++v) {
            if ((used >> v) & 1) continue;
            if (col[static_cast<std::size_t>(v)] != min_col) continue;
            std::uint64_t row = 0;
            for (int q = 0; q < p; ++q)
                if (g.has_edge(v, placed[static_cast<std::size_t>(q)])) row |= std::uint64_t(1) << q;
            if (row > best[static_cast<std::size_t>(p)]) continue;
            if (row < best[static_cast<std::size_t>(p)]) {
                best[static_cast<std::size_t>(p)] = row;
                for (int q = p + 1; q < n; ++q) best[static_cast<std::size_t>(q)] = ~std::uint64_t(0);
            }
            placed.push_back(v);
            used |= std::uint64_t(1) << v;
            dfs(p + 1);
            used &= ~(std::uint64_t(1) << v);
            placed.pop_back();
        }
    }
};

} // namespace

canon_key canonical_form(const graph& g, int max_n) {
    require(g.n <= max_n && g.n <= 63, errc::size_limit_exceeded,
            "canonical form capped at " + std::to_string(std::min(max_n, 63)) + " vertices");
    canon_key key;
    key.n = g.n;
    if (g.n == 0) return key;
    auto col = refinement_colors(g);
    canon_searcher s{g, col, {}, {}, 0};
    s.placed.reserve(static_cast<std::size_t>(g.n));
    s.best.assign(static_cast<std::size_t>(g.n), ~std::uint64_t(0));
    s.dfs(0);
    key.rows = std::move(s.best);
    return key;
}

} // namespace flipcover
