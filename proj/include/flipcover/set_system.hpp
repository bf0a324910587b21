#pragma once

#include <cstdint>
#include <vector>

#include "flipcover/bitrow.hpp"
#include "flipcover/graph.hpp"

namespace flipcover {

// Finite set system over universe {0..universe-1}.  Duplicate member sets are
// kept (a neighborhood system may repeat); dedup flags families that were
// explicitly deduplicated.  tag[i] records the defining vertex of family[i]
// when there is one, else -1.
struct set_system {
    int universe = 0;
    std::vector<bitrow> family;
    std::vector<int> tag;
    bool dedup = false;
};

struct linear_order {
    std::vector<int> seq; // position -> element
    std::vector<int> pos; // element -> position
};

// Validates that seq is a permutation of 0..n-1 and fills pos.
linear_order order_from_seq(std::vector<int> seq);

// Closed neighborhoods N[v] tagged by v, universe = V(g).
set_system neighborhood_system(const graph& g);

// Number of distinct traces {X cap A : X in family}.  A must be duplicate-free
// and in range.
int trace_count(const set_system& s, const std::vector<int>& A);

// Max over the family of the number of consecutive order positions (i, i+1)
// separated by the set (exactly one endpoint inside).
int crossing_number(const set_system& s, const linear_order& o);

struct welzl_result {
    linear_order order;
    int crossing;          // tracked during construction; equals a recomputation
    std::uint64_t tie_seed; // seed of the tie-break priority stream, for replay
};

// Multiplicative-weights greedy order: repeatedly appends the unpicked
// element whose step crosses the least total weight, then doubles the weight
// of every set the new consecutive pair crosses.
welzl_result welzl_order(const set_system& s, std::uint64_t seed);

struct brute_force_result {
    linear_order order;
    int crossing;
};

// Exhaustive minimum over all |U|! orders; first minimizer in lexicographic
// enumeration wins ties.  Guarded by max_universe.
brute_force_result brute_force_optimal_order(const set_system& s, int max_universe = 9);

} // namespace flipcover
