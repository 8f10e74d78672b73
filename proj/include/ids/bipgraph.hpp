#pragma once

#include <span>
#include <utility>
#include <vector>

#include "ids/bitset.hpp"

namespace ids {

enum class Side { left, right };

// Immutable bipartitioned graph (L, R; E). Vertices are 0-based indices per
// side. Adjacency is kept both as sorted lists and as bitset rows: the lists
// drive ordered traversals, the rows feed the set-algebra kernels. The two
// representations are built together and never mutated afterwards, so the
// graph is safe to share read-only across threads.
struct BipartiteGraph {
    int n_left = 0;
    int n_right = 0;
    std::vector<std::vector<int>> adj_left;   // per L-vertex, sorted R-neighbors
    std::vector<std::vector<int>> adj_right;  // per R-vertex, sorted L-neighbors
    std::vector<DynBitset> left_rows;         // per L-vertex, mask over R
    std::vector<DynBitset> right_rows;        // per R-vertex, mask over L
    long long edge_count = 0;

    int degree(Side s, int i) const {
        return static_cast<int>(s == Side::left ? adj_left[static_cast<std::size_t>(i)].size()
                                                : adj_right[static_cast<std::size_t>(i)].size());
    }
};

// An l-subgraph handle: the chosen left set J plus the right side it induces,
// r_set = { r : N(r) subset of J } = R minus N(L minus J). Indices refer to
// the parent graph.
struct LSubgraph {
    std::vector<int> j_set;
    std::vector<int> r_set;
    const BipartiteGraph* parent = nullptr;
};

// Maps vertex indices of a derived graph back to the graph it was cut from.
struct IndexTranslation {
    std::vector<int> left_to_orig;
    std::vector<int> right_to_orig;
};

// Builds a graph from an edge list. Duplicate pairs are collapsed; an index
// out of range raises InputError naming the offending pair.
BipartiteGraph build(int n_left, int n_right, std::span<const std::pair<int, int>> edges);

// N(xs) on the opposite side, sorted ascending. N(empty) = empty.
std::vector<int> neighborhood(const BipartiteGraph& g, Side side, std::span<const int> xs);

// The l-subgraph of g induced by j: delete L minus j together with all its
// neighbors. Isolated R-vertices always survive induction.
LSubgraph induce_lsubgraph(const BipartiteGraph& g, std::span<const int> j);

// Mask form of the induced right side, for callers that stay in bitset land.
DynBitset induced_right_mask(const BipartiteGraph& g, const DynBitset& j_mask);

// Extracts the subgraph on (left_keep, right_keep), remapping indices
// densely; the translation maps new indices back to g's. Keep-lists must be
// sorted ascending.
std::pair<BipartiteGraph, IndexTranslation> induced_subgraph(const BipartiteGraph& g,
                                                             std::span<const int> left_keep,
                                                             std::span<const int> right_keep);

namespace detail {
void check_left_subset(const BipartiteGraph& g, std::span<const int> xs, const char* what);
void check_right_subset(const BipartiteGraph& g, std::span<const int> xs, const char* what);
} // namespace detail

} // namespace ids
