#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "flipcover/patterns.hpp"
#include "flipcover/rng.hpp"
#include "flipcover/set_system.hpp"
#include "fixtures.hpp"

using namespace flipcover;
using tfx::code_of;

namespace {

set_system nbhd(const graph& g) { return neighborhood_system(g); }

linear_order identity_order(int n) {
    std::vector<int> seq(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) seq[static_cast<std::size_t>(i)] = i;
    return order_from_seq(seq);
}

} // namespace

TEST_CASE("order_from_seq validates permutations") {
    auto o = order_from_seq({2, 0, 1});
    CHECK(o.seq == std::vector<int>{2, 0, 1});
    CHECK(o.pos == std::vector<int>{1, 2, 0});
    CHECK(code_of([] { order_from_seq({0, 0, 1}); }) == errc::bad_params);
    CHECK(code_of([] { order_from_seq({0, 3}); }) == errc::vertex_out_of_range);
}

TEST_CASE("neighborhood system tags closed neighborhoods by vertex") {
    graph p = tfx::path_graph(4);
    set_system s = nbhd(p);
    CHECK(s.universe == 4);
    REQUIRE(s.family.size() == 4);
    CHECK_FALSE(s.dedup);
    for (int v = 0; v < 4; ++v) {
        CHECK(s.tag[static_cast<std::size_t>(v)] == v);
        CHECK(s.family[static_cast<std::size_t>(v)].test(v));
    }
    CHECK(s.family[1].to_vector() == std::vector<int>{0, 1, 2});
    CHECK(s.family[3].to_vector() == std::vector<int>{2, 3});
}

TEST_CASE("trace counts collapse duplicate intersections") {
    // One side of the half-graph of order 3: b_0 sees {a_0}, which collides
    // with a_0's own closed neighborhood, so 6 sets leave only 5 traces.
    graph h = generate_pattern({pattern_kind::half_graph, 3, 0, 0});
    set_system s = nbhd(h);
    CHECK(trace_count(s, {0, 1, 2}) == 5);

    // Every closed neighborhood of K3 meets {0,1} in the same set.
    set_system k = nbhd(tfx::complete_graph(3));
    CHECK(trace_count(k, {0, 1}) == 1);
    CHECK(trace_count(k, {2}) == 1);

    // P3 against the full universe: N[0], N[1], N[2] all distinct.
    set_system p = nbhd(tfx::path_graph(3));
    CHECK(trace_count(p, {0, 1, 2}) == 3);

    CHECK(code_of([&] { trace_count(p, {0, 0}); }) == errc::bad_params);
    CHECK(code_of([&] { trace_count(p, {7}); }) == errc::vertex_out_of_range);
}

TEST_CASE("crossing number of the path order on P4 is 1") {
    graph p = tfx::path_graph(4);
    set_system s = nbhd(p);
    CHECK(crossing_number(s, identity_order(4)) == 1);
    // Interleaving the ends drives it up.
    CHECK(crossing_number(s, order_from_seq({0, 2, 1, 3})) > 1);
    CHECK(code_of([&] { crossing_number(s, identity_order(3)); }) == errc::bad_params);
}

TEST_CASE("crossing number is invariant under order reversal") {
    rng r(21);
    graph g = make_gnp(12, 0.3, 77);
    set_system s = nbhd(g);
    for (int trial = 0; trial < 10; ++trial) {
        auto seq = r.permutation(g.n);
        auto rev = seq;
        std::reverse(rev.begin(), rev.end());
        CHECK(crossing_number(s, order_from_seq(seq)) == crossing_number(s, order_from_seq(rev)));
    }
}

TEST_CASE("crossing number is monotone in the family") {
    rng r(22);
    graph g = make_gnp(10, 0.4, 78);
    set_system s = nbhd(g);
    set_system sub = s;
    sub.family.erase(sub.family.begin() + 3, sub.family.begin() + 7);
    sub.tag.erase(sub.tag.begin() + 3, sub.tag.begin() + 7);
    for (int trial = 0; trial < 10; ++trial) {
        auto o = order_from_seq(r.permutation(g.n));
        CHECK(crossing_number(sub, o) <= crossing_number(s, o));
    }
}

TEST_CASE("welzl order reports the crossing it achieves") {
    for (std::uint64_t seed : {1ULL, 2ULL, 99ULL}) {
        for (const graph& g : {tfx::path_graph(9), tfx::cycle_graph(8), make_grid(3), make_gnp(14, 0.25, 5)}) {
            set_system s = nbhd(g);
            welzl_result w = welzl_order(s, seed);
            CHECK(static_cast<int>(w.order.seq.size()) == g.n);
            // The tracked value must equal an independent recomputation.
            CHECK(w.crossing == crossing_number(s, w.order));
        }
    }
}

TEST_CASE("welzl order is deterministic per seed") {
    graph g = make_gnp(16, 0.3, 6);
    set_system s = nbhd(g);
    welzl_result a = welzl_order(s, 42);
    welzl_result b = welzl_order(s, 42);
    CHECK(a.order.seq == b.order.seq);
    CHECK(a.crossing == b.crossing);
    CHECK(a.tie_seed == b.tie_seed);
}

TEST_CASE("welzl beats typical random orders on a path") {
    graph g = tfx::path_graph(16);
    set_system s = nbhd(g);
    welzl_result w = welzl_order(s, 7);
    rng r(23);
    int best_random = g.n;
    for (int trial = 0; trial < 50; ++trial)
        best_random = std::min(best_random, crossing_number(s, order_from_seq(r.permutation(g.n))));
    CHECK(w.crossing <= best_random);
}

TEST_CASE("brute force optimum lower-bounds welzl and matches on P4") {
    graph p = tfx::path_graph(4);
    set_system sp = nbhd(p);
    brute_force_result bp = brute_force_optimal_order(sp);
    CHECK(bp.crossing == 1);
    CHECK(crossing_number(sp, bp.order) == 1);

    for (const graph& g : {tfx::cycle_graph(5), tfx::complete_graph(4), tfx::star_graph(4), make_gnp(6, 0.5, 9)}) {
        set_system s = nbhd(g);
        brute_force_result b = brute_force_optimal_order(s);
        CHECK(b.crossing == crossing_number(s, b.order));
        for (std::uint64_t seed : {1ULL, 2ULL, 3ULL}) CHECK(b.crossing <= welzl_order(s, seed).crossing);
    }

    set_system big = nbhd(tfx::path_graph(10));
    CHECK(code_of([&] { brute_force_optimal_order(big); }) == errc::size_limit_exceeded);
}

TEST_CASE("welzl handles degenerate systems") {
    graph one = build_graph(1, {});
    welzl_result w = welzl_order(nbhd(one), 0);
    CHECK(w.order.seq == std::vector<int>{0});
    CHECK(w.crossing == 0);

    // No edges: every neighborhood is a singleton, any order has crossing 2
    // at worst (each singleton separates its two flanking pairs).
    graph e3 = build_graph(3, {});
    welzl_result we = welzl_order(nbhd(e3), 1);
    CHECK(we.crossing == crossing_number(nbhd(e3), we.order));
    CHECK(we.crossing <= 2);
}
