#pragma once

#include <cstdint>
#include <vector>

#include "flipcover/graph.hpp"
#include "flipcover/set_system.hpp"

namespace flipcover {

struct compact_interval {
    std::vector<int> elems; // consecutive run of the order
    int witness;            // vertex whose closed neighborhood contains elems
};

struct compact_partition_t {
    std::vector<compact_interval> intervals;
    linear_order order;
};

// Greedy split of the order into maximal prefix runs that fit inside a single
// closed neighborhood.  The witness set of a run is tracked incrementally as
// the intersection of the members' closed neighborhoods.
compact_partition_t compact_partition(const graph& g, const linear_order& o);

struct cover_source {
    std::vector<int> order_seq;
    int r = 1;
    std::uint64_t seed = 0;
};

struct cover {
    std::vector<std::vector<int>> clusters; // sorted vertex sets
    cover_source source;
};

// Clusters are the closed neighborhoods N[I] of the partition intervals.
cover cover_from_partition(const graph& g, const compact_partition_t& p);

struct cover_report {
    bool is_cover_at_r = false;
    int diameter = 0; // max weak diameter over clusters; kUnreachable if one spans components
    int overlap = 0;  // max number of clusters sharing a vertex
    std::vector<int> uncovered;
};

// Full pipeline: r-th power -> neighborhood system -> weighted greedy order ->
// compact partition -> neighborhood-union clusters, then an independent check.
struct distance_cover_result {
    cover c;
    cover_report report;
    int crossing; // crossing number achieved by the order on the power system
    std::uint64_t tie_seed;
};
distance_cover_result distance_r_cover(const graph& g, int r, std::uint64_t seed);

// Recomputes coverage, diameter and overlap from scratch; trusts nothing the
// construction recorded.
cover_report verify_cover(const graph& g, const cover& c, int r);

struct incidence_result {
    bigraph inc;    // A side = vertices of g, B side = clusters
    double density; // edges / (vertices + clusters)
};
incidence_result incidence_graph(const graph& g, const cover& c);

} // namespace flipcover
