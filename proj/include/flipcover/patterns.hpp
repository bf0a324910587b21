#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "flipcover/graph.hpp"

namespace flipcover {

enum class pattern_kind {
    half_graph,         // a_i ~ b_j iff i <= j
    subdivided_clique,  // K_n, every edge a path with r internal vertices
    web,                // subdivided clique + a clique on each native's neighborhood
    biweb,              // subdivided biclique + cones on both native sides
    subdivided_biclique,
    rook,               // [n]^2, same row or same column (not both)
};

pattern_kind pattern_kind_from_name(const std::string& name);
const char* pattern_kind_name(pattern_kind k);

struct pattern_desc {
    pattern_kind kind = pattern_kind::half_graph;
    int n = 0;
    int m = 0; // second side for biweb / subdivided_biclique
    int r = 0; // internal vertices per subdivided edge
};

// Canonical numbering: natives first (side by side for two-sided kinds), then
// subdivision vertices grouped by edge in lex edge order, positions walking
// away from the first endpoint.  Two-sided subdivided kinds carry layer tags
// 1..r+2 (side A, the r path layers, side B) and native flags.
graph generate_pattern(const pattern_desc& d);

struct flip_spec {
    int k = 1;
    std::vector<int> lambda;                  // vertex -> class in [0, k)
    std::vector<std::vector<std::uint8_t>> R; // k x k, must be symmetric
};

// Builds a spec from undirected class pairs (symmetric closure).
flip_spec make_flip_spec(int k, std::vector<int> lambda, const std::vector<std::pair<int, int>>& pairs);

// G' with uv flipped exactly when (lambda(u), lambda(v)) is in R; loops are
// never created.  Keeps layer/native tags.  Throws AsymmetricR if R isn't.
graph apply_flip(const graph& g, const flip_spec& f);

struct rook_embedding_result {
    flip_spec flip;            // two classes: first grid row vs rest
    graph flipped;             // the flipped rook graph
    std::vector<int> selected; // vertices inducing the web, pattern numbering order
    graph induced;
    std::vector<int> iso;      // witness: induced -> generate_pattern(web n, r=2)
};

// Realizes the order-2 web on n natives inside a one-set flip of the rook
// graph on [n^2]^2: natives sit in the first row, each native pair gets a
// dedicated row holding its two subdivision vertices.
rook_embedding_result rook_web_embedding(int n);

// Monochromatic clique of the given size under an edge coloring of K_n.
std::optional<std::vector<int>> ramsey_find_clique(int n, const std::vector<std::vector<int>>& edge_color,
                                                   int target);

// Monochromatic combinatorial biclique: I x J all one color.
std::optional<std::pair<std::vector<int>, std::vector<int>>>
ramsey_find_biclique(int na, int nb, const std::vector<std::vector<int>>& color, int target);

// Sub-grid I1 x I2 of [n]^2 on which the pair coloring depends only on the
// coordinatewise order type of the pair.
std::optional<std::pair<std::vector<int>, std::vector<int>>>
ramsey_find_grid(int n, const std::vector<std::vector<int>>& color, int target);

struct rocket_witness {
    std::vector<int> A;
    std::vector<std::vector<int>> B; // petal vertex sets
    std::vector<std::vector<int>> C; // C[i] subset of B[i], matched to A
    flip_spec flip;
    int rho = 1;
};

struct rocket_check {
    bool ok = true;
    std::vector<std::string> violations;
};

// Checks, in the flipped graph: (1) A-C_i cross edges form a perfect
// matching, (2) no A edges into B_i minus C_i, (3) no edges from B_i minus C_i
// into another petal, (4) every C_i pair is joined by a path of length in
// [2, rho] whose interior stays in B_i minus C_i.
rocket_check verify_rocket_witness(const graph& g, const rocket_witness& w);

// Number of isomorphism classes of n-vertex induced subgraphs across the
// family host_of(h), h grown until the count stabilizes.
int count_iso_classes(const std::function<graph(int)>& host_of, int n, int max_host = 40,
                      long long subset_budget = 2000000);

// Plain fixtures shared by benchmarks and tests: the side x side grid with
// 4-neighbor adjacency, and G(n, p) drawn from the given seed.
graph make_grid(int side);
graph make_gnp(int n, double p, std::uint64_t seed);

} // namespace flipcover
