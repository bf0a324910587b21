#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "flipcover/graph.hpp"
#include "flipcover/patterns.hpp"

namespace flipcover {

enum class encode_variant { biweb, biclique };

encode_variant variant_from_name(const std::string& name);
const char* variant_name(encode_variant v);

// A two-sided subdivided pattern of order t together with a layer coloring
// and a symmetric relation on the colors.  Layers run 1..ell with ell = r+2;
// lc[i] is the color of layer i+1.  The color graph ([c], R) is twin-free and
// lc is surjective.  exceptional lists the colors of the two hop layers
// (layer 2 and layer ell-1) without duplicates.
struct layered_pattern {
    graph g; // unflipped pattern: biweb or subdivided biclique of order t
    encode_variant variant = encode_variant::biweb;
    int r = 0, t = 0, ell = 0, c = 0;
    std::vector<int> lc;
    std::vector<std::vector<std::uint8_t>> R;
    std::vector<int> exceptional;
};

struct canonical_flip_result {
    layered_pattern p;
    flip_spec flip; // per-vertex layer flip on p.g
    graph flipped;  // apply_flip(p.g, flip)
};

// Normalizes a layer coloring: merges colors with identical relation rows
// until the color graph is twin-free, then applies the induced layer flip to
// the order-t pattern.
canonical_flip_result canonical_flip(int t, int r, const std::vector<int>& lc,
                                     const std::vector<std::pair<int, int>>& R_pairs, encode_variant variant);

struct encoded_instance {
    graph host; // gadget graph plus a disjoint reference pattern, layer-tagged
    int r = 0, t = 0;
    encode_variant variant = encode_variant::biweb;
    std::vector<int> anchor; // source vertex -> host vertex carrying it
    int pattern_offset = 0;  // first host id of the reference pattern
    int source_n = 0;
};

// Embeds G in the pattern family: one gadget block per vertex (an anchor of
// high degree wearing a tail that ends in a small pendant), one induced path
// of calibrated length per edge, plus a disjoint order-t reference pattern.
encoded_instance encode_graph(const graph& g, int r, int t, encode_variant variant);

// Inverse of encode_graph using structure only: anchors are the high-degree
// vertices whose tail reaches a pendant gadget, edges are anchor pairs within
// the calibrated distance.
graph decode_interpretation(const graph& host, int r, int t, encode_variant variant);

struct probe_sets {
    std::vector<std::vector<int>> W; // per color: s^2 pattern vertex ids
    int s = 0;
};

// Draws each color's probe set from a dedicated block copy of the order-s^2
// sub-pattern; colors of the hop layers take s vertices from each of s
// distinct cones so no single vertex dominates a probe set's adjacency.
probe_sets select_probes(const layered_pattern& p, int s, bool paper_scale = false);

// Dense bitset graph used by the flip pipeline, where flipped layers get
// quadratically many edges and adjacency lists stop being economical.
struct dense_graph {
    int n = 0;
    std::vector<bitrow> rows;
    std::vector<int> layer;

    friend bool operator==(const dense_graph&, const dense_graph&) = default;
};

dense_graph to_dense(const graph& g);
graph from_dense(const dense_graph& d);
dense_graph apply_flip_dense(const dense_graph& g, const flip_spec& f);

struct popular_result {
    std::vector<int> f;                         // color -> color, an automorphism of ([c], R)
    std::vector<std::vector<long long>> counts; // counts[i][j] = members of A_sets[i] reading as color j
};

// Plurality vote: each member of A_sets[i] predicts its own color from its
// majorities against the probe sets; the winner must clear |A_i|/(4c) votes
// strictly and the resulting map must be a relation-preserving bijection.
popular_result popular_function(const dense_graph& flipped, const std::vector<std::vector<int>>& A_sets,
                                const std::vector<std::vector<int>>& probe_abs, const layered_pattern& p);

// Recovers the pre-flip graph exactly: every vertex's color is read off its
// probe majorities, then the relation is XORed away.  probe_offset shifts the
// pattern-relative probe ids into the flipped graph's id space.
dense_graph decode_flip(const dense_graph& flipped, const probe_sets& probes, int probe_offset,
                        const layered_pattern& p);

} // namespace flipcover
