#include "flipcover/set_system.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_set>

#include "flipcover/error.hpp"
#include "flipcover/rng.hpp"

namespace flipcover {

linear_order order_from_seq(std::vector<int> seq) {
    linear_order o;
    o.pos.assign(seq.size(), -1);
    for (std::size_t i = 0; i < seq.size(); ++i) {
        int e = seq[i];
        require(e >= 0 && e < static_cast<int>(seq.size()), errc::vertex_out_of_range, "order element out of range");
        require(o.pos[static_cast<std::size_t>(e)] == -1, errc::bad_params, "order repeats an element");
        o.pos[static_cast<std::size_t>(e)] = static_cast<int>(i);
    }
    o.seq = std::move(seq);
    return o;
}

set_system neighborhood_system(const graph& g) {
    set_system s;
    s.universe = g.n;
    s.family.reserve(static_cast<std::size_t>(g.n));
    s.tag.reserve(static_cast<std::size_t>(g.n));
    for (int v = 0; v < g.n; ++v) {
        bitrow row(g.n);
        row.set(v);
        for (int w : g.adj[static_cast<std::size_t>(v)]) row.set(w);
        s.family.push_back(std::move(row));
        s.tag.push_back(v);
    }
    return s;
}

int trace_count(const set_system& s, const std::vector<int>& A) {
    bitrow mask(s.universe);
    std::vector<bool> seen(static_cast<std::size_t>(s.universe), false);
    for (int a : A) {
        require(a >= 0 && a < s.universe, errc::vertex_out_of_range, "trace set element out of range");
        require(!seen[static_cast<std::size_t>(a)], errc::bad_params, "duplicate element in trace set");
        seen[static_cast<std::size_t>(a)] = true;
        mask.set(a);
    }
    std::unordered_set<bitrow, bitrow_hash> traces;
    traces.reserve(s.family.size() * 2);
    for (const auto& x : s.family) {
        bitrow tr = x;
        tr.and_with(mask);
        traces.insert(std::move(tr));
    }
    return static_cast<int>(traces.size());
}

int crossing_number(const set_system& s, const linear_order& o) {
    require(static_cast<int>(o.seq.size()) == s.universe, errc::bad_params, "order size does not match universe");
    int best = 0;
    bitrow posbits(s.universe);
    for (const auto& x : s.family) {
        posbits.clear();
        x.for_each([&](int e) { posbits.set(o.pos[static_cast<std::size_t>(e)]); });
        best = std::max(best, posbits.boundary());
    }
    return best;
}

welzl_result welzl_order(const set_system& s, std::uint64_t seed) {
    const int n = s.universe;
    const std::size_t nf = s.family.size();
    welzl_result res;
    res.tie_seed = substream_seed(seed, "welzl-tie");
    res.crossing = 0;
    if (n == 0) {
        res.order = order_from_seq({});
        return res;
    }

    rng r(res.tie_seed);
    auto prio = r.permutation(n); // higher value wins ties

    // Transposed incidence: member_sets[e] = family indices containing e.
    std::vector<bitrow> member_sets(static_cast<std::size_t>(n), bitrow(static_cast<int>(nf)));
    for (std::size_t f = 0; f < nf; ++f)
        s.family[f].for_each([&](int e) { member_sets[static_cast<std::size_t>(e)].set(static_cast<int>(f)); });

    std::vector<double> w(nf, 1.0);
    std::vector<double> tot(static_cast<std::size_t>(n), 0.0); // tot[e] = sum of w over sets containing e
    for (int e = 0; e < n; ++e) tot[static_cast<std::size_t>(e)] = static_cast<double>(member_sets[static_cast<std::size_t>(e)].count());
    std::vector<int> crossed(nf, 0);
    std::vector<bool> used(static_cast<std::size_t>(n), false);

    std::vector<int> seq;
    seq.reserve(static_cast<std::size_t>(n));
    // First element: no pair formed yet, so every choice costs the same;
    // the tie priority decides alone.
    {
        int pick = 0;
        for (int e = 1; e < n; ++e)
            if (prio[static_cast<std::size_t>(e)] > prio[static_cast<std::size_t>(pick)]) pick = e;
        seq.push_back(pick);
        used[static_cast<std::size_t>(pick)] = true;
    }

    bitrow diff(static_cast<int>(nf));
    double maxw = 1.0;
    for (int step = 1; step < n; ++step) {
        int prev = seq.back();
        int pick = -1;
        double pick_cost = 0.0;
        for (int e = 0; e < n; ++e) {
            if (used[static_cast<std::size_t>(e)]) continue;
            // Weight crossed by the new pair (prev, e): sets containing
            // exactly one endpoint.  cost = tot[prev] + tot[e] - 2*shared.
            double shared = 0.0;
            diff = member_sets[static_cast<std::size_t>(prev)];
            diff.and_with(member_sets[static_cast<std::size_t>(e)]);
            diff.for_each([&](int f) { shared += w[static_cast<std::size_t>(f)]; });
            double cost = tot[static_cast<std::size_t>(prev)] + tot[static_cast<std::size_t>(e)] - 2.0 * shared;
            if (pick == -1 || cost < pick_cost ||
                (cost == pick_cost && prio[static_cast<std::size_t>(e)] > prio[static_cast<std::size_t>(pick)])) {
                pick = e;
                pick_cost = cost;
            }
        }
        seq.push_back(pick);
        used[static_cast<std::size_t>(pick)] = true;

        diff = member_sets[static_cast<std::size_t>(prev)];
        diff.xor_with(member_sets[static_cast<std::size_t>(pick)]);
        diff.for_each([&](int f) {
            crossed[static_cast<std::size_t>(f)] += 1;
            double old = w[static_cast<std::size_t>(f)];
            s.family[f].for_each([&](int e) { tot[static_cast<std::size_t>(e)] += old; });
            w[static_cast<std::size_t>(f)] = 2.0 * old;
            maxw = std::max(maxw, w[static_cast<std::size_t>(f)]);
        });

        if (maxw > 0x1.0p512) {
            for (auto& x : w) x = std::ldexp(x, -512);
            for (auto& x : tot) x = std::ldexp(x, -512);
            maxw = std::ldexp(maxw, -512);
        }
    }

    res.order = order_from_seq(std::move(seq));
    // Each consecutive pair of the final order was formed exactly once, so the
    // per-set doubling count is that set's crossing count in the final order.
    for (std::size_t f = 0; f < nf; ++f) res.crossing = std::max(res.crossing, crossed[f]);
    return res;
}

brute_force_result brute_force_optimal_order(const set_system& s, int max_universe) {
    require(s.universe <= max_universe, errc::size_limit_exceeded,
            "exhaustive order search capped at " + std::to_string(max_universe) + " elements");
    std::vector<int> seq(static_cast<std::size_t>(s.universe));
    std::iota(seq.begin(), seq.end(), 0);
    brute_force_result best;
    best.crossing = -1;
    do {
        auto o = order_from_seq(seq);
        int c = crossing_number(s, o);
        if (best.crossing == -1 || c < best.crossing) {
            best.crossing = c;
            best.order = std::move(o);
        }
    } while (std::next_permutation(seq.begin(), seq.end()));
    if (best.crossing == -1) {
        best.crossing = 0;
        best.order = order_from_seq({});
    }
    return best;
}

} // namespace flipcover
