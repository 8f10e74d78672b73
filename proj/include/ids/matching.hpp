#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "ids/bipgraph.hpp"

namespace ids {

// Result of a maximum-cardinality matching of a left subset X into a right
// subset Y. When X cannot be saturated, `violator` carries a Hall certificate:
// the left vertices reachable from unmatched X-vertices by alternating paths,
// a set K' with |N(K') intersect Y| < |K'|.
struct MatchingResult {
    std::vector<std::pair<int, int>> pairs;  // ascending by left index
    int size = 0;
    std::optional<std::vector<int>> violator;  // present iff size < |X|
};

// Hopcroft-Karp on G[X, Y]. Augmenting-path searches scan vertices in
// ascending index order, so identical inputs give identical pairs.
MatchingResult max_matching(const BipartiteGraph& g, std::span<const int> x,
                            std::span<const int> y);

// True iff the maximum matching saturates X.
bool has_saturating_matching(const BipartiteGraph& g, std::span<const int> x,
                             std::span<const int> y);

// Mask-level entry points used by the predicate/solver layers (no per-call
// index validation or vector materialization).
MatchingResult max_matching_masks(const BipartiteGraph& g, const DynBitset& x_mask,
                                  const DynBitset& y_mask, bool want_certificate = true);

} // namespace ids
