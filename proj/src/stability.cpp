#include "flipcover/stability.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "flipcover/error.hpp"
#include "flipcover/rng.hpp"

namespace flipcover {

namespace {

// Class-level branching recursion.  B vertices with equal full neighborhoods
// are interchangeable, so a subset's value depends only on which classes it
// meets; every class is either fully adjacent or fully non-adjacent to each a,
// which keeps the recursion on class sets exact.
struct br_engine {
    int na = 0;
    int ncls = 0;
    std::vector<int> class_of;        // b -> class id
    std::vector<bitrow> class_adj;    // a -> classes fully adjacent to a
    std::unordered_map<bitrow, int, bitrow_hash> memo;
    std::size_t budget;

    br_engine(int na_, int nb, const std::vector<bitrow>& rows_b, std::size_t budget_)
        : na(na_), class_of(static_cast<std::size_t>(nb), -1), budget(budget_) {
        std::unordered_map<bitrow, int, bitrow_hash> ids;
        std::vector<int> rep;
        for (int b = 0; b < nb; ++b) {
            auto [it, fresh] = ids.emplace(rows_b[static_cast<std::size_t>(b)], ncls);
            if (fresh) {
                rep.push_back(b);
                ++ncls;
            }
            class_of[static_cast<std::size_t>(b)] = it->second;
        }
        class_adj.assign(static_cast<std::size_t>(na), bitrow(ncls));
        for (int c = 0; c < ncls; ++c)
            rows_b[static_cast<std::size_t>(rep[static_cast<std::size_t>(c)])].for_each(
                [&](int a) { class_adj[static_cast<std::size_t>(a)].set(c); });
    }

    bitrow classes_of(const bitrow& U) const {
        bitrow s(ncls);
        U.for_each([&](int b) { s.set(class_of[static_cast<std::size_t>(b)]); });
        return s;
    }

    int eval_classes(const bitrow& S) {
        if (S.none()) return -1;
        if (auto it = memo.find(S); it != memo.end()) return it->second;
        require(memo.size() < budget, errc::size_limit_exceeded, "branching memo budget exhausted");
        int best = -1;
        bitrow in(ncls), out(ncls);
        for (int a = 0; a < na; ++a) {
            in = S;
            in.and_with(class_adj[static_cast<std::size_t>(a)]);
            if (in.none() || in == S) continue; // one side empty: min is -1
            out = S;
            out.andnot_with(class_adj[static_cast<std::size_t>(a)]);
            int m = std::min(eval_classes(in), eval_classes(out));
            best = std::max(best, m);
        }
        memo.emplace(S, 1 + best);
        return 1 + best;
    }

    int eval(const bitrow& U) { return eval_classes(classes_of(U)); }
};

} // namespace

br_result branching_index(const bigraph& g, const std::vector<int>& U, int cap, const br_options& opt) {
    require(cap >= 0, errc::bad_params, "branching cap must be nonnegative");
    bitrow u_bits(g.nb);
    for (int b : U) {
        require(b >= 0 && b < g.nb, errc::vertex_out_of_range, "U element out of range");
        require(!u_bits.test(b), errc::bad_params, "duplicate element in U");
        u_bits.set(b);
    }
    std::vector<bitrow> rows_b(static_cast<std::size_t>(g.nb), bitrow(g.na));
    for (int b = 0; b < g.nb; ++b)
        for (int a : g.adj_b[static_cast<std::size_t>(b)]) rows_b[static_cast<std::size_t>(b)].set(a);
    br_engine eng(g.na, g.nb, rows_b, opt.memo_budget);
    br_result res;
    res.value = eng.eval(u_bits);
    res.above_cap = res.value > cap;
    return res;
}

int branching_index_naive(const bigraph& g, const std::vector<int>& U) {
    if (U.empty()) return -1;
    int best = -1;
    for (int a = 0; a < g.na; ++a) {
        std::vector<int> in, out;
        for (int b : U)
            (g.has_edge(a, b) ? in : out).push_back(b);
        int m;
        if (in.empty() || out.empty())
            m = -1;
        else
            m = std::min(branching_index_naive(g, in), branching_index_naive(g, out));
        best = std::max(best, m);
    }
    return 1 + best;
}

sample_result sample_unique_neighbor(const bigraph& g, std::uint64_t seed) {
    require(g.na >= 2, errc::bad_params, "sampler needs |A| >= 2");
    for (int b = 0; b < g.nb; ++b)
        require(g.deg_b(b) >= 1, errc::degree_zero_vertex, "B vertex " + std::to_string(b) + " has no neighbors");

    // Bucket by degree: [alpha^i, alpha^(i+1)), alpha = 1.1.
    const double alpha = 1.1;
    std::map<int, std::vector<int>> buckets;
    for (int b = 0; b < g.nb; ++b) {
        int deg = g.deg_b(b);
        int i = static_cast<int>(std::floor(std::log(static_cast<double>(deg)) / std::log(alpha) + 1e-12));
        buckets[i].push_back(b);
    }
    std::vector<int> order;
    for (const auto& [i, v] : buckets) order.push_back(i);
    std::stable_sort(order.begin(), order.end(), [&](int i, int j) { return buckets[i].size() > buckets[j].size(); });

    const int budget = static_cast<int>(std::ceil(40.0 * std::log(static_cast<double>(g.na) + 2.0)));
    const double need = static_cast<double>(g.nb) / (150.0 * std::log(static_cast<double>(g.na)));

    rng r(seed);
    std::vector<char> in_x(static_cast<std::size_t>(g.na));
    for (int i : order) {
        const auto& bucket = buckets[i];
        double p = std::pow(alpha, -static_cast<double>(i)); // inclusion rate 1/d, d = alpha^i
        for (int draw = 1; draw <= budget; ++draw) {
            for (int a = 0; a < g.na; ++a) in_x[static_cast<std::size_t>(a)] = r.unit() < p ? 1 : 0;
            std::vector<int> uniq;
            for (int b : bucket) {
                int cnt = 0;
                for (int a : g.adj_b[static_cast<std::size_t>(b)]) {
                    cnt += in_x[static_cast<std::size_t>(a)];
                    if (cnt > 1) break;
                }
                if (cnt == 1) uniq.push_back(b);
            }
            if (static_cast<double>(uniq.size()) >= need) {
                std::vector<char> hit(static_cast<std::size_t>(g.na), 0);
                for (int b : uniq)
                    for (int a : g.adj_b[static_cast<std::size_t>(b)])
                        if (in_x[static_cast<std::size_t>(a)]) hit[static_cast<std::size_t>(a)] = 1;
                sample_result res;
                // Drop X members that ended up unused by B_unique; counts are
                // unaffected, and the returned X names only load-bearing picks.
                for (int a = 0; a < g.na; ++a)
                    if (hit[static_cast<std::size_t>(a)]) res.X.push_back(a);
                res.B_unique = std::move(uniq);
                res.bucket_index = i;
                res.draws_used = draw;
                return res;
            }
        }
    }
    fail(errc::retry_budget_exhausted, "no degree bucket met the uniqueness bound within budget");
}

namespace {

bigraph bigraph_from_rows(int na, int nb, const std::vector<bitrow>& rows_a) {
    std::vector<std::pair<int, int>> es;
    for (int a = 0; a < na; ++a) rows_a[static_cast<std::size_t>(a)].for_each([&](int b) { es.emplace_back(a, b); });
    return make_bigraph(na, nb, es);
}

} // namespace

reduction_result reduce_neighborhoods(const bigraph& g, int d, std::uint64_t seed, bool keep_stages) {
    require(d >= 0, errc::bad_params, "reduction depth must be nonnegative");
    require(g.na >= 2, errc::bad_params, "reduction needs |A| >= 2");

    std::vector<bitrow> rows_a(static_cast<std::size_t>(g.na), bitrow(g.nb));
    std::vector<bitrow> rows_b(static_cast<std::size_t>(g.nb), bitrow(g.na));
    for (int a = 0; a < g.na; ++a)
        for (int b : g.adj_a[static_cast<std::size_t>(a)]) {
            rows_a[static_cast<std::size_t>(a)].set(b);
            rows_b[static_cast<std::size_t>(b)].set(a);
        }
    {
        std::unordered_set<bitrow, bitrow_hash> distinct(rows_b.begin(), rows_b.end());
        require(static_cast<int>(distinct.size()) == g.nb, errc::bad_params,
                "B-neighborhoods must be pairwise distinct");
    }

    reduction_result res;
    if (keep_stages) res.stage_graphs.push_back(bigraph_from_rows(g.na, g.nb, rows_a));

    bitrow in_x(g.na);
    std::vector<int> b_cur(static_cast<std::size_t>(g.nb));
    for (int b = 0; b < g.nb; ++b) b_cur[static_cast<std::size_t>(b)] = b;

    for (int stage = 1; stage <= d; ++stage) {
        const int sk = stage - 1; // counts stages already completed
        std::vector<int> a_cur;
        bitrow a_mask(g.na);
        for (int a = 0; a < g.na; ++a)
            if (!in_x.test(a)) {
                a_cur.push_back(a);
                a_mask.set(a);
            }

        // Classes of the surviving B by neighborhoods inside the X picked so far.
        std::unordered_map<bitrow, std::vector<int>, bitrow_hash> class_map;
        for (int b : b_cur) {
            bitrow key = rows_b[static_cast<std::size_t>(b)];
            key.and_with(in_x);
            class_map[key].push_back(b);
        }
        std::vector<std::vector<int>> classes;
        classes.reserve(class_map.size());
        for (auto& [key, members] : class_map) classes.push_back(std::move(members));
        std::sort(classes.begin(), classes.end(), [](const auto& x, const auto& y) { return x.front() < y.front(); });

        br_engine eng(g.na, g.nb, rows_b, std::size_t(1) << 22);
        std::vector<bitrow> flip_mask(static_cast<std::size_t>(g.na), bitrow(g.nb));
        long long flipped = 0;
        for (const auto& members : classes) {
            bitrow p_bits(g.nb);
            for (int b : members) p_bits.set(b);
            int br_p = eng.eval(p_bits);
            require(br_p <= d - sk, errc::branching_bound_violated,
                    "class at stage " + std::to_string(stage) + " has branching index " + std::to_string(br_p) +
                        " > " + std::to_string(d - sk));
            bitrow t(g.nb);
            for (int a : a_cur) {
                t = rows_a[static_cast<std::size_t>(a)];
                t.and_with(p_bits);
                if (eng.eval(t) == d - sk) flip_mask[static_cast<std::size_t>(a)].or_with(p_bits);
            }
        }
        for (int a : a_cur) {
            auto& mask = flip_mask[static_cast<std::size_t>(a)];
            if (mask.none()) continue;
            flipped += mask.count();
            rows_a[static_cast<std::size_t>(a)].xor_with(mask);
            mask.for_each([&](int b) {
                auto& row = rows_b[static_cast<std::size_t>(b)];
                row.test(a) ? row.reset(a) : row.set(a);
            });
        }

        std::vector<int> b_plus, b_minus;
        for (int b : b_cur)
            (rows_b[static_cast<std::size_t>(b)].intersects(a_mask) ? b_plus : b_minus).push_back(b);

        stage_record rec;
        rec.k = stage;
        rec.flipped_pairs = flipped;
        if (2 * static_cast<long long>(b_plus.size()) >= static_cast<long long>(b_cur.size())) {
            rec.case_taken = 1;
            if (b_plus.empty()) {
                b_cur.clear();
            } else if (a_cur.size() == 1) {
                // Trivial side: the one remaining a is every survivor's
                // unique neighbor, no sampling needed.
                rec.X = a_cur;
                b_cur = b_plus;
            } else {
                std::vector<std::pair<int, int>> es;
                std::vector<int> b_pos(static_cast<std::size_t>(g.nb), -1);
                for (std::size_t j = 0; j < b_plus.size(); ++j) b_pos[static_cast<std::size_t>(b_plus[j])] = static_cast<int>(j);
                for (std::size_t i = 0; i < a_cur.size(); ++i)
                    rows_a[static_cast<std::size_t>(a_cur[i])].for_each([&](int b) {
                        if (b_pos[static_cast<std::size_t>(b)] != -1)
                            es.emplace_back(static_cast<int>(i), b_pos[static_cast<std::size_t>(b)]);
                    });
                bigraph sub = make_bigraph(static_cast<int>(a_cur.size()), static_cast<int>(b_plus.size()), es);
                auto sampled = sample_unique_neighbor(sub, substream_seed(seed, "reduce-stage-" + std::to_string(stage)));
                for (int i : sampled.X) rec.X.push_back(a_cur[static_cast<std::size_t>(i)]);
                b_cur.clear();
                for (int j : sampled.B_unique) b_cur.push_back(b_plus[static_cast<std::size_t>(j)]);
            }
        } else {
            rec.case_taken = 2;
            b_cur = b_minus;
        }
        for (int a : rec.X) in_x.set(a);
        rec.b_size = static_cast<int>(b_cur.size());
        rec.b_members = b_cur;
        res.trace.push_back(rec);
        if (keep_stages) res.stage_graphs.push_back(bigraph_from_rows(g.na, g.nb, rows_a));
    }

    res.A_final = in_x.to_vector();
    res.B_final = b_cur;
    std::vector<std::pair<int, int>> es;
    std::vector<int> b_pos(static_cast<std::size_t>(g.nb), -1);
    for (std::size_t j = 0; j < res.B_final.size(); ++j) b_pos[static_cast<std::size_t>(res.B_final[j])] = static_cast<int>(j);
    for (std::size_t i = 0; i < res.A_final.size(); ++i)
        rows_a[static_cast<std::size_t>(res.A_final[i])].for_each([&](int b) {
            if (b_pos[static_cast<std::size_t>(b)] != -1) es.emplace_back(static_cast<int>(i), b_pos[static_cast<std::size_t>(b)]);
        });
    res.G_final = make_bigraph(static_cast<int>(res.A_final.size()), static_cast<int>(res.B_final.size()), es);
    return res;
}

namespace {

struct halfgraph_searcher {
    const graph& g;
    const std::vector<bitrow>& rows;
    int limit;
    halfgraph_witness best;
    std::vector<int> as, bs;

    void record() {
        if (static_cast<int>(as.size()) > best.size) {
            best.size = static_cast<int>(as.size());
            best.a = as;
            best.b = bs;
        }
    }

    // cand_a: usable as a future a (non-adjacent to every chosen b, unused).
    // cand_b: usable as a future b (adjacent to every chosen a, unused).
    void extend(const bitrow& cand_a, const bitrow& cand_b) {
        record();
        int k = static_cast<int>(as.size());
        if (k >= limit) return;
        if (k + std::min(cand_a.count(), cand_b.count()) <= best.size) return;
        std::vector<int> a_opts = cand_a.to_vector();
        for (int a : a_opts) {
            bitrow b_opts = cand_b;
            b_opts.and_with(rows[static_cast<std::size_t>(a)]); // new b must be adjacent to the new a too
            if (b_opts.none()) continue;
            bitrow next_a = cand_a;
            next_a.reset(a);
            b_opts.for_each([&](int b) {
                bitrow na2 = next_a;
                na2.andnot_with(rows[static_cast<std::size_t>(b)]); // future a's avoid the new b
                na2.reset(b);
                bitrow nb2 = cand_b;
                nb2.and_with(rows[static_cast<std::size_t>(a)]);
                nb2.reset(a);
                nb2.reset(b);
                as.push_back(a);
                bs.push_back(b);
                extend(na2, nb2);
                as.pop_back();
                bs.pop_back();
            });
        }
    }
};

} // namespace

halfgraph_witness max_semi_induced_halfgraph(const graph& g, int limit) {
    require(limit >= 0 && limit <= 8, errc::size_limit_exceeded, "half-graph search depth capped at 8");
    auto rows = adjacency_rows(g);
    halfgraph_searcher s{g, rows, limit, {}, {}, {}};
    bitrow all(g.n);
    all.set_all();
    s.extend(all, all);
    return s.best;
}

graph bigraph_as_graph(const bigraph& bg) {
    std::vector<std::pair<int, int>> es;
    for (int a = 0; a < bg.na; ++a)
        for (int b : bg.adj_a[static_cast<std::size_t>(a)]) es.emplace_back(a, bg.na + b);
    return build_graph(bg.na + bg.nb, es);
}

} // namespace flipcover
