#pragma once

#include <optional>
#include <vector>

#include "ids/bipgraph.hpp"

namespace ids::oracle {

// Ground truth by exhaustion. Everything here re-derives identifiability from
// the definition with its own augmenting-path search over plain adjacency
// lists -- deliberately no code shared with the matching module.
struct EnumerationResult {
    std::vector<std::vector<int>> identifiable_sets;  // every J inducing an identifiable G(J)
    std::optional<std::vector<int>> max_set;          // first J of maximum cardinality
    std::optional<int> min_size;                      // smallest |J| over identifiable sets
    bool max_unique = true;  // false if another J ties max_set's cardinality
};

inline constexpr int kDefaultGuard = 20;

// Checks one J against the definition (independent matching search).
bool is_identifiable_bruteforce(const BipartiteGraph& g, const std::vector<int>& j);

// Enumerates all 2^|L| subsets in ascending-cardinality order (lexicographic
// within a size). GuardError when |L| > limit; pass a larger limit explicitly.
EnumerationResult enumerate_identifiable(const BipartiteGraph& g, int limit = kDefaultGuard);

// Smallest (then lexicographically first) J with |J| <= k inducing an
// identifiable l-subgraph; nullopt when none exists. Same guard as above.
std::optional<std::vector<int>> solve_min_ids_exact(const BipartiteGraph& g, int k,
                                                    int limit = kDefaultGuard);

} // namespace ids::oracle
