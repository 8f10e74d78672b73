#include "ids/solver.hpp"

#include <cassert>
#include <string>

#include "ids/errors.hpp"
#include "ids/identify.hpp"
#include "ids/matching.hpp"

namespace ids {

namespace {

DynBitset left_neighborhood_mask(const BipartiteGraph& g, const DynBitset& left_set) {
    DynBitset out(g.n_right);
    left_set.for_each([&](int l) { out |= g.left_rows[l]; });
    return out;
}

bool saturable(const BipartiteGraph& g, const DynBitset& x, const DynBitset& y,
               long long* matching_count) {
    if (matching_count) ++*matching_count;
    MatchingResult mr = max_matching_masks(g, x, y, /*want_certificate=*/false);
    return mr.size == static_cast<int>(x.count());
}

IndexTranslation identity_translation(const BipartiteGraph& g) {
    IndexTranslation t;
    t.left_to_orig.resize(g.n_left);
    t.right_to_orig.resize(g.n_right);
    for (int i = 0; i < g.n_left; ++i) t.left_to_orig[i] = i;
    for (int i = 0; i < g.n_right; ++i) t.right_to_orig[i] = i;
    return t;
}

IndexTranslation compose(const IndexTranslation& outer, const IndexTranslation& inner) {
    IndexTranslation t;
    t.left_to_orig.reserve(inner.left_to_orig.size());
    t.right_to_orig.reserve(inner.right_to_orig.size());
    for (int i : inner.left_to_orig) t.left_to_orig.push_back(outer.left_to_orig[i]);
    for (int i : inner.right_to_orig) t.right_to_orig.push_back(outer.right_to_orig[i]);
    return t;
}

} // namespace

BlockerSet find_minimal_blocker(const BipartiteGraph& g, int v, BlockerScanStart start,
                                long long* matching_count) {
    if (v < 0 || v >= g.n_left)
        throw InputError("find_minimal_blocker: vertex " + std::to_string(v) + " out of range");

    DynBitset x(g.n_left);
    x.fill();
    x.reset(v);
    DynBitset y(g.n_right);
    y.fill();
    y.andnot(g.left_rows[v]);

    if (matching_count) ++*matching_count;
    MatchingResult mr = max_matching_masks(g, x, y, /*want_certificate=*/true);
    if (mr.size == static_cast<int>(x.count()))
        throw ContractError("find_minimal_blocker: identifiability test for vertex " +
                            std::to_string(v) + " passes; no blocker exists");

    // Starting set must itself be unsaturable; both choices are.
    std::vector<int> base;
    if (start == BlockerScanStart::hall_violator) {
        assert(mr.violator.has_value());
        base = *mr.violator;
    } else {
        base = x.to_indices();
    }

    // One ascending pass: drop w whenever the rest is still unsaturable.
    // Saturable sets are closed under subsets, so the survivor set is minimal:
    // any unsaturable proper subset would have justified dropping some kept w.
    DynBitset current = DynBitset::from_indices(g.n_left, base);
    for (int w : base) {
        DynBitset candidate = current;
        candidate.reset(w);
        if (!saturable(g, candidate, y, matching_count)) current = candidate;
    }

    BlockerSet out;
    out.pivot = v;
    out.members = current.to_indices();
    assert(!out.members.empty());

    // |N(K) cap Y| < |K| must hold for the minimal unsaturable K.
    DynBitset nk = left_neighborhood_mask(g, current);
    nk &= y;
    assert(nk.count() < current.count());
    (void)nk;
    return out;
}

std::pair<BipartiteGraph, IndexTranslation> delete_closed_neighborhood(const BipartiteGraph& g,
                                                                       std::span<const int> k) {
    detail::check_left_subset(g, k, "delete_closed_neighborhood");
    DynBitset kmask = DynBitset::from_indices(g.n_left, k);
    DynBitset left_keep(g.n_left);
    left_keep.fill();
    left_keep.andnot(kmask);
    DynBitset right_keep(g.n_right);
    right_keep.fill();
    right_keep.andnot(left_neighborhood_mask(g, kmask));
    return induced_subgraph(g, left_keep.to_indices(), right_keep.to_indices());
}

SolveTrace max_identifiable_subgraph(const BipartiteGraph& g, BlockerScanStart start) {
    SolveTrace trace;
    BipartiteGraph work = g;
    IndexTranslation to_orig = identity_translation(g);

    for (;;) {
        if (work.edge_count == 0) {
            trace.outcome = SolveOutcome::none_exists;
            return trace;
        }
        IdentifiabilityReport rep = is_identifiable(work);
        // The ascending scan runs one matching per vertex up to the first
        // failure, or all |L| of them on success.
        trace.matchings_run +=
            rep.identifiable ? work.n_left : static_cast<long long>(*rep.failing_vertex) + 1;
        if (rep.identifiable) {
            trace.outcome = SolveOutcome::found;
            trace.result = to_orig.left_to_orig;  // ascending by construction
            return trace;
        }

        int pivot = *rep.failing_vertex;
        BlockerSet blocker = find_minimal_blocker(work, pivot, start, &trace.matchings_run);

        DynBitset kmask = DynBitset::from_indices(work.n_left, blocker.members);
        DynBitset nk = left_neighborhood_mask(work, kmask);

        SolveIteration it;
        it.pivot = to_orig.left_to_orig[pivot];
        it.blocker.reserve(blocker.members.size());
        for (int w : blocker.members) it.blocker.push_back(to_orig.left_to_orig[w]);
        nk.for_each([&](int r) { it.deleted_right.push_back(to_orig.right_to_orig[r]); });
        trace.iterations.push_back(std::move(it));

        auto [next, step] = delete_closed_neighborhood(work, blocker.members);
        to_orig = compose(to_orig, step);
        work = std::move(next);
        assert(trace.iterations.size() <= static_cast<size_t>(g.n_left));
    }
}

bool has_identifiable_subgraph(const BipartiteGraph& g) {
    return max_identifiable_subgraph(g).outcome == SolveOutcome::found;
}

} // namespace ids
