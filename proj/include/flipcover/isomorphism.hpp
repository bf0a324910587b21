#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "flipcover/graph.hpp"

namespace flipcover {

struct iso_options {
    int max_n = 64; // guard: backtracking blows up eventually; override knowingly
};

// Vertex map g -> h witnessing isomorphism, or nullopt.  Uses iterated degree
// refinement to cut the search.  Throws SizeLimitExceeded above max_n.
std::optional<std::vector<int>> are_isomorphic(const graph& g, const graph& h, const iso_options& opt = {});

// Canonical form: lexicographically minimal adjacency-row sequence over all
// vertex orders that list refinement classes in canonical class order.  Two
// graphs have equal keys iff they are isomorphic.
struct canon_key {
    int n = 0;
    std::vector<std::uint64_t> rows; // rows[p] = adjacency mask of position p against positions < p

    friend bool operator==(const canon_key&, const canon_key&) = default;
};

struct canon_key_hash {
    std::size_t operator()(const canon_key& k) const {
        std::uint64_t h = 0xcbf29ce484222325ULL ^ static_cast<std::uint64_t>(k.n);
        for (auto r : k.rows) {
            h ^= r;
            h *= 0x100000001b3ULL;
        }
        return static_cast<std::size_t>(h);
    }
};

canon_key canonical_form(const graph& g, int max_n = 16);

// Canonical color classes from iterated neighborhood refinement.  Colors are
// dense ranks of class signatures, so they are isomorphism-invariant.
std::vector<int> refinement_colors(const graph& g);

} // namespace flipcover
