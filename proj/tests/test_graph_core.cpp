#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>
#include <unordered_set>

#include "flipcover/graph.hpp"
#include "flipcover/graph_io.hpp"
#include "flipcover/isomorphism.hpp"
#include "flipcover/rng.hpp"
#include "fixtures.hpp"

using namespace flipcover;
using tfx::code_of;

TEST_CASE("build_graph normalizes and validates") {
    graph g = build_graph(4, {{2, 1}, {0, 1}, {1, 2}, {3, 0}});
    CHECK(g.n == 4);
    CHECK(g.edge_count() == 3); // duplicate collapsed
    CHECK(g.adj[1] == std::vector<int>{0, 2});
    CHECK(g.has_edge(0, 3));
    CHECK_FALSE(g.has_edge(1, 3));
    CHECK(g.edge_list() == std::vector<std::pair<int, int>>{{0, 1}, {0, 3}, {1, 2}});

    CHECK(code_of([] { build_graph(3, {{0, 0}}); }) == errc::loop_edge);
    CHECK(code_of([] { build_graph(3, {{0, 3}}); }) == errc::vertex_out_of_range);
    CHECK(code_of([] { build_graph(-1, {}); }) == errc::bad_params);
}

TEST_CASE("BFS distances") {
    graph p = tfx::path_graph(5);
    CHECK(distances_from(p, 0) == std::vector<int>{0, 1, 2, 3, 4});
    CHECK(distances_from(p, 2) == std::vector<int>{2, 1, 0, 1, 2});

    graph two = disjoint_union(tfx::path_graph(2), tfx::path_graph(2));
    auto d = distances_from(two, 0);
    CHECK(d[1] == 1);
    CHECK(d[2] == kUnreachable);
    CHECK(code_of([&] { distances_from(two, 9); }) == errc::vertex_out_of_range);
}

TEST_CASE("restricted BFS walks only allowed vertices") {
    graph c = tfx::cycle_graph(6);
    bitrow allowed(6);
    for (int v : {0, 1, 2, 3}) allowed.set(v);
    auto d = distances_from_within(c, 0, allowed);
    CHECK(d[3] == 3); // the short way around needs 4 and 5
    CHECK(d[4] == kUnreachable);

    bitrow none(6);
    auto d0 = distances_from_within(c, 2, none); // src always allowed
    CHECK(d0[2] == 0);
    CHECK(d0[1] == kUnreachable);
}

TEST_CASE("graph power") {
    graph p = tfx::path_graph(5);
    graph p2 = graph_power(p, 2);
    CHECK(p2.edge_count() == 7);
    CHECK(p2.has_edge(0, 2));
    CHECK_FALSE(p2.has_edge(0, 3));
    // Large r saturates each component.
    graph two = disjoint_union(tfx::path_graph(3), tfx::path_graph(3));
    graph sat = graph_power(two, 10);
    CHECK(sat.edge_count() == 6);
    CHECK_FALSE(sat.has_edge(0, 3));
    CHECK(code_of([&] { graph_power(p, 0); }) == errc::bad_params);
}

TEST_CASE("induced subgraph preserves the given order") {
    graph c = tfx::cycle_graph(5);
    auto r = induced_subgraph(c, {3, 0, 4});
    CHECK(r.g.n == 3);
    CHECK(r.orig == std::vector<int>{3, 0, 4});
    CHECK(r.g.has_edge(0, 2));  // 3-4
    CHECK(r.g.has_edge(1, 2));  // 0-4
    CHECK_FALSE(r.g.has_edge(0, 1));
    CHECK(code_of([&] { induced_subgraph(c, {1, 1}); }) == errc::bad_params);
    CHECK(code_of([&] { induced_subgraph(c, {5}); }) == errc::vertex_out_of_range);
}

TEST_CASE("semi-induced bipartite view keeps only cross edges") {
    graph k = tfx::complete_graph(4);
    bigraph b = semi_induced(k, {0, 1}, {2, 3});
    CHECK(b.na == 2);
    CHECK(b.nb == 2);
    CHECK(b.edge_count() == 4);
    CHECK(code_of([&] { semi_induced(k, {0, 1}, {1, 2}); }) == errc::overlapping_sides);
    CHECK(code_of([&] { semi_induced(k, {0, 0}, {2}); }) == errc::bad_params);
}

TEST_CASE("weak diameter measures through the whole graph") {
    graph s = tfx::star_graph(4);
    CHECK(weak_diameter(s, {1, 2, 3}) == 2); // leaves meet at the center
    CHECK(weak_diameter(s, {2}) == 0);
    graph two = disjoint_union(tfx::path_graph(2), tfx::path_graph(2));
    CHECK(weak_diameter(two, {0, 2}) == kUnreachable);
    CHECK(code_of([&] { weak_diameter(s, {}); }) == errc::empty_set);
}

TEST_CASE("adjacency rows mirror the lists") {
    graph c = tfx::cycle_graph(7);
    auto rows = adjacency_rows(c);
    REQUIRE(rows.size() == 7);
    for (int v = 0; v < 7; ++v) CHECK(rows[static_cast<std::size_t>(v)].to_vector() == c.adj[static_cast<std::size_t>(v)]);
}

TEST_CASE("disjoint union offsets the second operand and keeps tags") {
    graph a = tfx::path_graph(3);
    graph b = tfx::cycle_graph(3);
    a.layer = {1, 2, 3};
    a.native = {1, 0, 0};
    b.layer = {4, 4, 4};
    b.native = {0, 0, 1};
    graph u = disjoint_union(a, b);
    CHECK(u.n == 6);
    CHECK(u.edge_count() == 5);
    CHECK(u.has_edge(3, 5));
    CHECK_FALSE(u.has_edge(2, 3));
    CHECK(u.layer == std::vector<int>{1, 2, 3, 4, 4, 4});
    CHECK(u.native == std::vector<std::uint8_t>{1, 0, 0, 0, 0, 1});
}

TEST_CASE("edge list IO round trips") {
    graph g = tfx::petersen();
    std::stringstream ss;
    write_edge_list(g, ss);
    graph h = read_edge_list(ss);
    CHECK(h.n == g.n);
    CHECK(h.edge_list() == g.edge_list());

    std::stringstream bad("3 2\n0 1\n");
    CHECK(code_of([&] { read_edge_list(bad); }) == errc::format_error);
    std::stringstream neg("-1 0\n");
    CHECK(code_of([&] { read_edge_list(neg); }) == errc::format_error);
}

TEST_CASE("JSON IO round trips tags") {
    graph g = tfx::path_graph(3);
    g.layer = {1, 2, 1};
    g.native = {1, 0, 1};
    std::stringstream ss;
    write_graph_json(g, ss);
    graph h = read_graph_json(ss);
    CHECK(h.edge_list() == g.edge_list());
    CHECK(h.layer == g.layer);
    CHECK(h.native == g.native);

    std::stringstream miss(R"({"schema_version":1,"n":2})");
    CHECK(code_of([&] { read_graph_json(miss); }) == errc::format_error);
    std::stringstream short_layer(R"({"schema_version":1,"n":2,"edges":[],"layer":[1]})");
    CHECK(code_of([&] { read_graph_json(short_layer); }) == errc::format_error);
    std::stringstream garbage("not json");
    CHECK(code_of([&] { read_graph_json(garbage); }) == errc::format_error);
}

TEST_CASE("isomorphism finds witnesses and rejects non-isomorphic pairs") {
    rng r(11);
    graph g = tfx::petersen();
    for (int trial = 0; trial < 5; ++trial) {
        auto perm = r.permutation(g.n);
        graph h = tfx::permute_graph(g, perm);
        auto m = are_isomorphic(g, h);
        REQUIRE(m.has_value());
        CHECK(tfx::is_isomorphism_witness(g, h, *m));
    }
    // Same degree sequence, different structure.
    graph c6 = tfx::cycle_graph(6);
    graph c3c3 = disjoint_union(tfx::cycle_graph(3), tfx::cycle_graph(3));
    CHECK_FALSE(are_isomorphic(c6, c3c3).has_value());
    CHECK_FALSE(are_isomorphic(tfx::path_graph(4), tfx::star_graph(3)).has_value());

    graph big = tfx::path_graph(70);
    CHECK(code_of([&] { are_isomorphic(big, big); }) == errc::size_limit_exceeded);
}

TEST_CASE("canonical form separates exactly the isomorphism classes") {
    // Unlabeled graph counts on n vertices.
    const int want[] = {1, 1, 2, 4, 11, 34, 156};
    for (int n = 1; n <= 6; ++n) {
        int pairs = n * (n - 1) / 2;
        std::unordered_set<canon_key, canon_key_hash> keys;
        for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << pairs); ++mask) {
            std::vector<std::pair<int, int>> e;
            int idx = 0;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v, ++idx)
                    if ((mask >> idx) & 1) e.emplace_back(u, v);
            keys.insert(canonical_form(build_graph(n, e)));
        }
        CHECK(static_cast<int>(keys.size()) == want[n]);
    }
}

TEST_CASE("canonical form agrees with the isomorphism test") {
    rng r(12);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 2 + static_cast<int>(r.below(7));
        graph g = flipcover::graph{}; // placeholder, rebuilt below
        std::vector<std::pair<int, int>> e;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (r.bernoulli(0.5)) e.emplace_back(u, v);
        g = build_graph(n, e);
        graph h = tfx::permute_graph(g, r.permutation(n));
        CHECK(canonical_form(g) == canonical_form(h));
    }
    CHECK_FALSE(canonical_form(tfx::cycle_graph(6)) ==
                canonical_form(disjoint_union(tfx::cycle_graph(3), tfx::cycle_graph(3))));
    CHECK(code_of([] { canonical_form(tfx::path_graph(17)); }) == errc::size_limit_exceeded);
}

TEST_CASE("refinement colors are isomorphism-invariant") {
    graph p = tfx::path_graph(4);
    auto col = refinement_colors(p);
    CHECK(col[0] == col[3]);
    CHECK(col[1] == col[2]);
    CHECK(col[0] != col[1]);

    auto pet = refinement_colors(tfx::petersen()); // vertex-transitive
    for (int v = 1; v < 10; ++v) CHECK(pet[static_cast<std::size_t>(v)] == pet[0]);

    rng r(13);
    graph g = tfx::cycle_graph(8);
    auto perm = r.permutation(8);
    graph h = tfx::permute_graph(g, perm);
    auto cg = refinement_colors(g), ch = refinement_colors(h);
    for (int v = 0; v < 8; ++v) CHECK(cg[static_cast<std::size_t>(v)] == ch[static_cast<std::size_t>(perm[static_cast<std::size_t>(v)])]);
}
