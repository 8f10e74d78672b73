#include "ids/identify.hpp"

#include "ids/matching.hpp"

namespace ids {

IdentifiabilityReport is_identifiable(const BipartiteGraph& g) {
    if (g.edge_count == 0) return {false, std::nullopt, true};

    DynBitset x_all(g.n_left);
    x_all.fill();
    for (int v = 0; v < g.n_left; ++v) {
        DynBitset x = x_all;
        x.reset(v);
        DynBitset y(g.n_right);
        y.fill();
        y.andnot(g.left_rows[v]);
        MatchingResult mr = max_matching_masks(g, x, y, /*want_certificate=*/false);
        if (mr.size < g.n_left - 1) return {false, v, false};
    }
    return {true, std::nullopt, false};
}

IdentifiabilityReport is_lsubgraph_identifiable(const BipartiteGraph& g, std::span<const int> j) {
    detail::check_left_subset(g, j, "is_lsubgraph_identifiable");
    LSubgraph sub = induce_lsubgraph(g, j);
    auto [h, tr] = induced_subgraph(g, sub.j_set, sub.r_set);
    IdentifiabilityReport rep = is_identifiable(h);
    if (rep.failing_vertex) rep.failing_vertex = tr.left_to_orig[*rep.failing_vertex];
    return rep;
}

} // namespace ids
