#include "ids/reductions.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "ids/errors.hpp"
#include "ids/rng.hpp"

namespace ids {

namespace {

std::vector<std::vector<int>> color_classes(const MCQInstance& inst) {
    std::vector<std::vector<int>> cls(inst.k + 1);
    for (int v = 0; v < inst.n; ++v) cls[inst.coloring[v]].push_back(v);
    return cls;
}

// cross[i][j] (i < j): edge ids with that color pair, input order.
std::vector<std::vector<std::vector<int>>> cross_edges(const MCQInstance& inst, int* dropped) {
    std::vector<std::vector<std::vector<int>>> cross(
        inst.k + 1, std::vector<std::vector<int>>(inst.k + 1));
    *dropped = 0;
    for (size_t eid = 0; eid < inst.edges.size(); ++eid) {
        auto [u, v] = inst.edges[eid];
        int cu = inst.coloring[u], cv = inst.coloring[v];
        if (cu == cv) {
            ++*dropped;
            continue;
        }
        cross[std::min(cu, cv)][std::max(cu, cv)].push_back(static_cast<int>(eid));
    }
    return cross;
}

} // namespace

void validate_mcq(const MCQInstance& inst) {
    if (inst.n < 1) throw InputError("mcq: vertex count must be at least 1");
    if (inst.k < 1) throw InputError("mcq: color count must be at least 1");
    if (static_cast<int>(inst.coloring.size()) != inst.n)
        throw InputError("mcq: coloring covers " + std::to_string(inst.coloring.size()) +
                         " vertices, expected " + std::to_string(inst.n));
    std::vector<int> class_size(inst.k + 1, 0);
    for (int v = 0; v < inst.n; ++v) {
        int c = inst.coloring[v];
        if (c < 1 || c > inst.k)
            throw InputError("mcq: vertex " + std::to_string(v + 1) + " has color " +
                             std::to_string(c) + " outside 1.." + std::to_string(inst.k));
        ++class_size[c];
    }
    for (int c = 1; c <= inst.k; ++c)
        if (class_size[c] == 0) throw InputError("mcq: color class " + std::to_string(c) + " is empty");
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : inst.edges) {
        if (u < 0 || u >= inst.n || v < 0 || v >= inst.n)
            throw InputError("mcq: edge (" + std::to_string(u + 1) + ", " + std::to_string(v + 1) +
                             ") out of range for " + std::to_string(inst.n) + " vertices");
        if (u == v) throw InputError("mcq: self-loop at vertex " + std::to_string(u + 1));
        if (u > v) std::swap(u, v);
        if (!seen.insert({u, v}).second)
            throw InputError("mcq: duplicate edge (" + std::to_string(u + 1) + ", " +
                             std::to_string(v + 1) + ")");
    }
}

ReductionOutput mcq_to_minids_k(const MCQInstance& inst) {
    validate_mcq(inst);
    if (inst.k < 3)
        throw ContractError("mcq_to_minids_k: requires k >= 3 (got " + std::to_string(inst.k) +
                            "); solve such instances directly");

    const int n = inst.n, k = inst.k;
    auto cls = color_classes(inst);
    ReductionOutput out;
    out.k_prime = 2 * k;
    auto cross = cross_edges(inst, &out.dropped_same_color_edges);

    out.left_labels.reserve(n + k);
    for (int v = 0; v < n; ++v) out.left_labels.push_back({LeftLabel::Kind::vertex, v});
    for (int i = 1; i <= k; ++i) out.left_labels.push_back({LeftLabel::Kind::special, i});
    auto t_left = [&](int i) { return n + i - 1; };

    std::vector<std::pair<int, int>> bip_edges;
    int rindex = 0;

    // E-vertices: one per cross-color edge, adjacent to both endpoints and to
    // every special vertex outside the color pair.
    for (int i = 1; i <= k; ++i) {
        for (int j = i + 1; j <= k; ++j) {
            for (int eid : cross[i][j]) {
                auto [u, v] = inst.edges[eid];
                bip_edges.push_back({u, rindex});
                bip_edges.push_back({v, rindex});
                for (int x = 1; x <= k; ++x)
                    if (x != i && x != j) bip_edges.push_back({t_left(x), rindex});
                out.right_labels.push_back({RightLabel::Kind::E, i, j, eid});
                ++rindex;
            }
        }
    }
    // F_i: k private slots per vertex of V_i; each slot adjacent to its vertex
    // and to every special vertex of a different color.
    for (int i = 1; i <= k; ++i) {
        int slot = 0;
        for (int v : cls[i]) {
            for (int s = 0; s < k; ++s) {
                ++slot;
                bip_edges.push_back({v, rindex});
                for (int x = 1; x <= k; ++x)
                    if (x != i) bip_edges.push_back({t_left(x), rindex});
                out.right_labels.push_back({RightLabel::Kind::F, i, slot, 0});
                ++rindex;
            }
        }
    }

    out.graph = build(n + k, rindex, bip_edges);
    return out;
}

ReductionOutput mcq_to_minids_nl_minus_k(const MCQInstance& inst) {
    validate_mcq(inst);
    if (inst.k < 3)
        throw ContractError("mcq_to_minids_nl_minus_k: requires k >= 3 (got " +
                            std::to_string(inst.k) + ")");
    auto cls = color_classes(inst);
    for (int c = 1; c <= inst.k; ++c)
        if (cls[c].size() < 2)
            throw ContractError("mcq_to_minids_nl_minus_k: color class " + std::to_string(c) +
                                " has " + std::to_string(cls[c].size()) +
                                " vertex; every class needs at least 2");

    const int n = inst.n, k = inst.k, r = n + k;
    ReductionOutput out;
    auto cross = cross_edges(inst, &out.dropped_same_color_edges);

    out.left_labels.reserve(n + k);
    for (int v = 0; v < n; ++v) out.left_labels.push_back({LeftLabel::Kind::vertex, v});
    for (int i = 1; i <= k; ++i) out.left_labels.push_back({LeftLabel::Kind::special, i});
    auto t_left = [&](int i) { return n + i - 1; };
    out.k_prime = (n + k) - k;

    std::vector<std::pair<int, int>> bip_edges;
    int rindex = 0;

    // q-copies: r per cross-color edge, adjacent to both classes minus the
    // edge's endpoints, plus the specials outside the color pair.
    for (int i = 1; i <= k; ++i) {
        for (int j = i + 1; j <= k; ++j) {
            for (int eid : cross[i][j]) {
                auto [u, v] = inst.edges[eid];
                int vi = inst.coloring[u] == i ? u : v;  // endpoint in V_i
                int vj = vi == u ? v : u;
                for (int copy = 1; copy <= r; ++copy) {
                    for (int w : cls[i])
                        if (w != vi) bip_edges.push_back({w, rindex});
                    for (int w : cls[j])
                        if (w != vj) bip_edges.push_back({w, rindex});
                    for (int x = 1; x <= k; ++x)
                        if (x != i && x != j) bip_edges.push_back({t_left(x), rindex});
                    out.right_labels.push_back({RightLabel::Kind::q, eid, copy, 0});
                    ++rindex;
                }
            }
        }
    }
    // p-privates: k+1 per vertex, adjacent to the vertex and to all specials.
    for (int i = 1; i <= k; ++i) {
        for (int v : cls[i]) {
            for (int slot = 1; slot <= k + 1; ++slot) {
                bip_edges.push_back({v, rindex});
                for (int x = 1; x <= k; ++x) bip_edges.push_back({t_left(x), rindex});
                out.right_labels.push_back({RightLabel::Kind::p, v, slot, 0});
                ++rindex;
            }
        }
    }

    out.graph = build(n + k, rindex, bip_edges);
    return out;
}

std::optional<std::vector<int>> solve_mcq_exact(const MCQInstance& inst, long long guard) {
    validate_mcq(inst);
    if (inst.k > 6)
        throw GuardError("solve_mcq_exact: k = " + std::to_string(inst.k) +
                         " exceeds the supported bound 6");
    auto cls = color_classes(inst);
    long long combos = 1;
    for (int c = 1; c <= inst.k; ++c) {
        combos *= static_cast<long long>(cls[c].size());
        if (combos > guard)
            throw GuardError("solve_mcq_exact: class-size product exceeds the guard " +
                             std::to_string(guard));
    }

    std::set<std::pair<int, int>> adj;
    for (auto [u, v] : inst.edges) adj.insert({std::min(u, v), std::max(u, v)});
    auto adjacent = [&](int u, int v) {
        return adj.count({std::min(u, v), std::max(u, v)}) > 0;
    };

    std::vector<int> pick(inst.k + 1, 0);  // pick[c] = index into cls[c]
    for (;;) {
        bool ok = true;
        for (int a = 1; a <= inst.k && ok; ++a)
            for (int b = a + 1; b <= inst.k && ok; ++b)
                if (!adjacent(cls[a][pick[a]], cls[b][pick[b]])) ok = false;
        if (ok) {
            std::vector<int> clique;
            for (int c = 1; c <= inst.k; ++c) clique.push_back(cls[c][pick[c]]);
            std::sort(clique.begin(), clique.end());
            return clique;
        }
        int c = inst.k;
        while (c >= 1 && pick[c] + 1 == static_cast<int>(cls[c].size())) pick[c--] = 0;
        if (c < 1) return std::nullopt;
        ++pick[c];
    }
}

BipartiteGraph gen_random_bipartite(int n_left, int n_right, double edge_probability,
                                    uint64_t seed) {
    if (n_left < 0 || n_right < 0) throw InputError("gen_random_bipartite: negative side size");
    if (!(edge_probability >= 0.0 && edge_probability <= 1.0))
        throw InputError("gen_random_bipartite: edge probability must lie in [0, 1]");
    SplitMix64 rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int l = 0; l < n_left; ++l)
        for (int r = 0; r < n_right; ++r)
            if (rng.next_double() < edge_probability) edges.push_back({l, r});
    return build(n_left, n_right, edges);
}

} // namespace ids
