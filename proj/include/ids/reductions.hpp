#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ids/bipgraph.hpp"

namespace ids {

// Multicolored Clique instance: k-colored graph, one color per vertex.
struct MCQInstance {
    int n = 0;
    int k = 0;
    std::vector<int> coloring;                   // size n, colors 1..k
    std::vector<std::pair<int, int>> edges;      // distinct, u < v, first-occurrence order
};

// Throws InputError on malformed instances: coloring size/range, empty color
// class, self-loop, duplicate or out-of-range edge.
void validate_mcq(const MCQInstance& inst);

// Left side of a reduction graph: either an original vertex (value = 0-based
// vertex id) or a special vertex t_i (value = color i, 1-based).
struct LeftLabel {
    enum class Kind { vertex, special } kind = Kind::vertex;
    int value = 0;
};

// Right side: E-vertex (a=i, b=j colors, c=edge id), F-private (a=color,
// b=slot within F_i), p-private (a=vertex id, b=slot), or q-copy (a=edge id,
// b=copy number). Edge ids are 0-based positions in MCQInstance::edges;
// slots/copies are 1-based ordinals.
struct RightLabel {
    enum class Kind { E, F, p, q } kind = Kind::E;
    int a = 0, b = 0, c = 0;
};

struct ReductionOutput {
    BipartiteGraph graph;
    int k_prime = 0;
    std::vector<LeftLabel> left_labels;
    std::vector<RightLabel> right_labels;
    int dropped_same_color_edges = 0;
};

// Gadget for the |J| <= k' minimization problem: L = V + {t_1..t_k}; one
// E-vertex per cross-color edge (adjacent to its endpoints and every t_x with
// x outside the color pair); k private F_i slots per vertex (adjacent to the
// vertex and every t_x with x != i); k' = 2k. Requires k >= 3.
ReductionOutput mcq_to_minids_k(const MCQInstance& inst);

// Gadget for the |J| <= |L|-k variant: k+1 privates p_{v,l} per vertex, each
// adjacent to v and to all t_x; per cross-color edge e in V_i x V_j, r = n+k
// copies q_{e,l}, each adjacent to V_i minus e's endpoint, V_j minus e's
// endpoint, and every t_x with x outside {i,j}; k' = |L|-k. Requires k >= 3
// and every color class of size >= 2.
ReductionOutput mcq_to_minids_nl_minus_k(const MCQInstance& inst);

// Exhaustive product search over one-vertex-per-class choices (classes in
// color order, vertices in input order; the first clique found is returned,
// as a sorted vertex set). Requires k <= 6 and product of class sizes within
// the guard.
std::optional<std::vector<int>> solve_mcq_exact(const MCQInstance& inst,
                                                long long guard = 1000000);

// Each (l, r) pair included independently with probability p, scanned in
// row-major order (l outer, r inner), driven by SplitMix64(seed). Identical
// arguments reproduce identical graphs on every platform.
BipartiteGraph gen_random_bipartite(int n_left, int n_right, double edge_probability,
                                    uint64_t seed);

} // namespace ids
