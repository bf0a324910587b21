#pragma once

#include <cstdint>
#include <vector>

#include "flipcover/graph.hpp"

namespace flipcover {

struct br_options {
    std::size_t memo_budget = std::size_t(1) << 22; // max memo entries before giving up
};

struct br_result {
    int value = -1;
    bool above_cap = false; // value exceeds the requested cap (value still exact)
};

// Branching index of U (a subset of the B side): -1 for empty U, else
// 1 + max over a in A of min over the two parts N(a) cap U / U minus N(a),
// where a part being empty contributes -1 directly.  Memoized on the set of
// equal-neighborhood classes present in U; the value only depends on which
// classes occur, not on their multiplicities.
br_result branching_index(const bigraph& g, const std::vector<int>& U, int cap, const br_options& opt = {});

// Reference recursion straight off the definition: vertex subsets, no memo,
// no cap.  Exponential; only for cross-checking small instances.
int branching_index_naive(const bigraph& g, const std::vector<int>& U);

struct sample_result {
    std::vector<int> X;        // subset of A, pruned to members with a neighbor in B_unique
    std::vector<int> B_unique; // every member has exactly one neighbor in X
    int bucket_index = 0;      // degree bucket [alpha^i, alpha^(i+1)) that succeeded
    int draws_used = 0;
};

// Random X subset of A such that a large fraction of some degree bucket of B
// sees exactly one X-neighbor.  Buckets are tried largest first with a
// logarithmic draw budget each; requires |A| >= 2 and min B-degree >= 1.
sample_result sample_unique_neighbor(const bigraph& g, std::uint64_t seed);

struct stage_record {
    int k = 0;          // stage index (1-based artifacts: produced X_k, B_k)
    int case_taken = 0; // 1 = sampled on the surviving side, 2 = kept the vanished side
    int b_size = 0;     // |B_k| after the stage
    std::vector<int> X; // X_k (original A ids)
    std::vector<int> b_members; // B_k itself, for per-stage invariant recounts
    long long flipped_pairs = 0;
};

struct reduction_result {
    std::vector<int> A_final; // union of all X_k, sorted
    std::vector<int> B_final;
    bigraph G_final;          // rewritten graph restricted to (A_final, B_final)
    std::vector<stage_record> trace;
    std::vector<bigraph> stage_graphs; // G_0..G_d when keep_stages was set
};

// Staged rewrite driving every surviving B vertex to at most d distinct
// A'-neighbors while keeping neighborhoods distinct.  Requires |A| >= 2,
// pairwise distinct B-neighborhoods, and branching index of B at most d.
reduction_result reduce_neighborhoods(const bigraph& g, int d, std::uint64_t seed, bool keep_stages = false);

struct halfgraph_witness {
    int size = 0;
    std::vector<int> a, b; // a[i] adj b[j] iff i <= j, tuples disjoint
};

// Largest semi-induced half-graph, exhaustive with pruning; limit caps the
// search depth and must stay small.
halfgraph_witness max_semi_induced_halfgraph(const graph& g, int limit = 8);

// View a bipartite graph as a plain graph (A ids first, then B ids).
graph bigraph_as_graph(const bigraph& bg);

} // namespace flipcover
