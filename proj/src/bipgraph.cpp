#include "ids/bipgraph.hpp"

#include <algorithm>
#include <string>

#include "ids/errors.hpp"

namespace ids {

namespace detail {

void check_left_subset(const BipartiteGraph& g, std::span<const int> xs, const char* what) {
    for (int x : xs)
        if (x < 0 || x >= g.n_left)
            throw InputError(std::string(what) + ": left index " + std::to_string(x) +
                             " out of range [0, " + std::to_string(g.n_left) + ")");
}

void check_right_subset(const BipartiteGraph& g, std::span<const int> xs, const char* what) {
    for (int x : xs)
        if (x < 0 || x >= g.n_right)
            throw InputError(std::string(what) + ": right index " + std::to_string(x) +
                             " out of range [0, " + std::to_string(g.n_right) + ")");
}

} // namespace detail

BipartiteGraph build(int n_left, int n_right, std::span<const std::pair<int, int>> edges) {
    if (n_left < 0 || n_right < 0)
        throw InputError("build: negative side size");

    BipartiteGraph g;
    g.n_left = n_left;
    g.n_right = n_right;
    g.adj_left.assign(static_cast<std::size_t>(n_left), {});
    g.adj_right.assign(static_cast<std::size_t>(n_right), {});
    g.left_rows.assign(static_cast<std::size_t>(n_left), DynBitset(static_cast<std::size_t>(n_right)));
    g.right_rows.assign(static_cast<std::size_t>(n_right), DynBitset(static_cast<std::size_t>(n_left)));

    for (const auto& [l, r] : edges) {
        if (l < 0 || l >= n_left || r < 0 || r >= n_right)
            throw InputError("build: edge (" + std::to_string(l) + ", " + std::to_string(r) +
                             ") out of range for sides " + std::to_string(n_left) + "x" +
                             std::to_string(n_right));
        auto li = static_cast<std::size_t>(l), ri = static_cast<std::size_t>(r);
        if (g.left_rows[li].test(ri)) continue;  // duplicate pair
        g.left_rows[li].set(ri);
        g.right_rows[ri].set(li);
        g.adj_left[li].push_back(r);
        g.adj_right[ri].push_back(l);
        ++g.edge_count;
    }
    for (auto& a : g.adj_left) std::sort(a.begin(), a.end());
    for (auto& a : g.adj_right) std::sort(a.begin(), a.end());
    return g;
}

std::vector<int> neighborhood(const BipartiteGraph& g, Side side, std::span<const int> xs) {
    if (side == Side::left) {
        detail::check_left_subset(g, xs, "neighborhood");
        DynBitset acc(static_cast<std::size_t>(g.n_right));
        for (int x : xs) acc |= g.left_rows[static_cast<std::size_t>(x)];
        return acc.to_indices();
    }
    detail::check_right_subset(g, xs, "neighborhood");
    DynBitset acc(static_cast<std::size_t>(g.n_left));
    for (int x : xs) acc |= g.right_rows[static_cast<std::size_t>(x)];
    return acc.to_indices();
}

DynBitset induced_right_mask(const BipartiteGraph& g, const DynBitset& j_mask) {
    // r survives iff N(r) is a subset of J, i.e. r has no neighbor in L \ J.
    DynBitset excluded(static_cast<std::size_t>(g.n_right));
    for (int l = 0; l < g.n_left; ++l)
        if (!j_mask.test(static_cast<std::size_t>(l)))
            excluded |= g.left_rows[static_cast<std::size_t>(l)];
    DynBitset r = DynBitset::full(static_cast<std::size_t>(g.n_right));
    r.andnot(excluded);
    return r;
}

LSubgraph induce_lsubgraph(const BipartiteGraph& g, std::span<const int> j) {
    detail::check_left_subset(g, j, "induce_lsubgraph");
    DynBitset j_mask = DynBitset::from_indices(static_cast<std::size_t>(g.n_left), j);
    LSubgraph sub;
    sub.parent = &g;
    sub.j_set = j_mask.to_indices();
    sub.r_set = induced_right_mask(g, j_mask).to_indices();
    return sub;
}

std::pair<BipartiteGraph, IndexTranslation> induced_subgraph(const BipartiteGraph& g,
                                                             std::span<const int> left_keep,
                                                             std::span<const int> right_keep) {
    detail::check_left_subset(g, left_keep, "induced_subgraph");
    detail::check_right_subset(g, right_keep, "induced_subgraph");

    IndexTranslation tr;
    tr.left_to_orig.assign(left_keep.begin(), left_keep.end());
    tr.right_to_orig.assign(right_keep.begin(), right_keep.end());

    std::vector<int> right_new(static_cast<std::size_t>(g.n_right), -1);
    for (std::size_t i = 0; i < tr.right_to_orig.size(); ++i)
        right_new[static_cast<std::size_t>(tr.right_to_orig[i])] = static_cast<int>(i);

    std::vector<std::pair<int, int>> edges;
    for (std::size_t nl = 0; nl < tr.left_to_orig.size(); ++nl)
        for (int r : g.adj_left[static_cast<std::size_t>(tr.left_to_orig[nl])])
            if (int nr = right_new[static_cast<std::size_t>(r)]; nr >= 0)
                edges.emplace_back(static_cast<int>(nl), nr);

    return {build(static_cast<int>(tr.left_to_orig.size()),
                  static_cast<int>(tr.right_to_orig.size()), edges),
            std::move(tr)};
}

} // namespace ids
