#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "ids/bipgraph.hpp"

namespace ids {

// Minimal left set K (excluding the pivot v) with no saturating matching into
// R minus N(v). Every proper subset of K does saturate, which forces
// |N(K) cap (R \ N(v))| < |K|.
struct BlockerSet {
    int pivot = -1;
    std::vector<int> members;
};

// Where the minimality scan starts: the Hall violator certificate from the
// failed matching (default; usually small), or all of L minus {v}. Both end
// at a set satisfying the BlockerSet invariants.
enum class BlockerScanStart { hall_violator, full_left };

// Pre: L\{v} has no saturating matching into R\N(v); ContractError otherwise.
// `matching_count`, when given, is incremented once per max-matching run.
BlockerSet find_minimal_blocker(const BipartiteGraph& g, int v,
                                BlockerScanStart start = BlockerScanStart::hall_violator,
                                long long* matching_count = nullptr);

// G - N[k]: drop k from the left side and N(k) from the right side. The
// translation maps the new indices back to g's.
std::pair<BipartiteGraph, IndexTranslation> delete_closed_neighborhood(const BipartiteGraph& g,
                                                                       std::span<const int> k);

struct SolveIteration {
    int pivot = -1;                  // original coordinates
    std::vector<int> blocker;        // original coordinates
    std::vector<int> deleted_right;  // N(blocker) at deletion time, original coordinates
};

enum class SolveOutcome { found, none_exists };

struct SolveTrace {
    std::vector<SolveIteration> iterations;
    std::optional<std::vector<int>> result;  // maximum J, original coordinates, sorted
    SolveOutcome outcome = SolveOutcome::none_exists;
    long long matchings_run = 0;  // max-matching computations across the whole solve
};

// The main loop: edgeless -> none_exists; identifiable -> found with J =
// surviving left set; otherwise take the smallest failing vertex, find its
// minimal blocker K, delete N[K], repeat. At most |L| iterations.
SolveTrace max_identifiable_subgraph(const BipartiteGraph& g,
                                     BlockerScanStart start = BlockerScanStart::hall_violator);

bool has_identifiable_subgraph(const BipartiteGraph& g);

} // namespace ids
