#include "flipcover/covers.hpp"

#include <algorithm>

#include "flipcover/error.hpp"

namespace flipcover {

compact_partition_t compact_partition(const graph& g, const linear_order& o) {
    require(static_cast<int>(o.seq.size()) == g.n, errc::bad_params, "order size does not match graph");
    compact_partition_t part;
    part.order = o;
    if (g.n == 0) return part;

    auto rows = adjacency_rows(g);
    for (int v = 0; v < g.n; ++v) rows[static_cast<std::size_t>(v)].set(v); // closed neighborhoods

    std::size_t i = 0;
    while (i < o.seq.size()) {
        compact_interval iv;
        int first = o.seq[i];
        iv.elems.push_back(first);
        bitrow witnesses = rows[static_cast<std::size_t>(first)];
        std::size_t j = i + 1;
        for (; j < o.seq.size(); ++j) {
            bitrow next = witnesses;
            next.and_with(rows[static_cast<std::size_t>(o.seq[j])]);
            if (next.none()) break;
            witnesses = std::move(next);
            iv.elems.push_back(o.seq[j]);
        }
        iv.witness = witnesses.next(0);
        part.intervals.push_back(std::move(iv));
        i = j;
    }
    return part;
}

cover cover_from_partition(const graph& g, const compact_partition_t& p) {
    cover c;
    c.source.order_seq = p.order.seq;
    c.source.r = 1;
    for (const auto& iv : p.intervals) {
        bitrow cl(g.n);
        for (int v : iv.elems) {
            cl.set(v);
            for (int w : g.adj[static_cast<std::size_t>(v)]) cl.set(w);
        }
        c.clusters.push_back(cl.to_vector());
    }
    return c;
}

distance_cover_result distance_r_cover(const graph& g, int r, std::uint64_t seed) {
    require(r >= 1, errc::bad_params, "cover radius must be >= 1");
    graph gp = (r == 1) ? g : graph_power(g, r);
    set_system sys = neighborhood_system(gp);
    welzl_result wr = welzl_order(sys, seed);
    compact_partition_t part = compact_partition(gp, wr.order);
    distance_cover_result res{cover_from_partition(gp, part), {}, wr.crossing, wr.tie_seed};
    res.c.source.r = r;
    res.c.source.seed = seed;
    res.report = verify_cover(g, res.c, r);
    return res;
}

cover_report verify_cover(const graph& g, const cover& c, int r) {
    require(r >= 1, errc::bad_params, "cover radius must be >= 1");
    cover_report rep;

    std::vector<bitrow> cluster_bits;
    cluster_bits.reserve(c.clusters.size());
    std::vector<int> membership(static_cast<std::size_t>(g.n), 0);
    for (const auto& cl : c.clusters) {
        bitrow b(g.n);
        for (int v : cl) {
            require(v >= 0 && v < g.n, errc::vertex_out_of_range, "cluster vertex out of range");
            b.set(v);
            membership[static_cast<std::size_t>(v)] += 1;
        }
        cluster_bits.push_back(std::move(b));
    }

    rep.overlap = 0;
    for (int v = 0; v < g.n; ++v) rep.overlap = std::max(rep.overlap, membership[static_cast<std::size_t>(v)]);

    // All-pairs distances once; balls and cluster diameters read off it.
    std::vector<std::vector<int>> dist;
    dist.reserve(static_cast<std::size_t>(g.n));
    for (int v = 0; v < g.n; ++v) dist.push_back(distances_from(g, v));

    for (int v = 0; v < g.n; ++v) {
        bitrow ball(g.n);
        for (int u = 0; u < g.n; ++u)
            if (dist[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] <= r) ball.set(u);
        bool covered = false;
        for (const auto& cb : cluster_bits)
            if (ball.is_subset_of(cb)) {
                covered = true;
                break;
            }
        if (!covered) rep.uncovered.push_back(v);
    }
    rep.is_cover_at_r = rep.uncovered.empty();

    rep.diameter = 0;
    for (const auto& cl : c.clusters) {
        for (std::size_t i = 0; i < cl.size() && rep.diameter != kUnreachable; ++i)
            for (std::size_t j = i + 1; j < cl.size(); ++j) {
                int d = dist[static_cast<std::size_t>(cl[i])][static_cast<std::size_t>(cl[j])];
                if (d == kUnreachable) { // cluster spans two components
                    rep.diameter = kUnreachable;
                    break;
                }
                rep.diameter = std::max(rep.diameter, d);
            }
        if (rep.diameter == kUnreachable) break;
    }
    return rep;
}

incidence_result incidence_graph(const graph& g, const cover& c) {
    std::vector<std::pair<int, int>> es;
    for (std::size_t ci = 0; ci < c.clusters.size(); ++ci)
        for (int v : c.clusters[ci]) es.emplace_back(v, static_cast<int>(ci));
    incidence_result res;
    res.inc = make_bigraph(g.n, static_cast<int>(c.clusters.size()), es);
    long long verts = static_cast<long long>(g.n) + static_cast<long long>(c.clusters.size());
    res.density = verts == 0 ? 0.0 : static_cast<double>(res.inc.edge_count()) / static_cast<double>(verts);
    return res;
}

} // namespace flipcover
