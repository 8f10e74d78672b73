#pragma once

#include <optional>
#include <span>

#include "ids/bipgraph.hpp"

namespace ids {

// Outcome of the identifiability predicate. A graph is identifiable when it
// has at least one edge and, for every left vertex v, L minus {v} can be
// matched into R minus N(v). `failing_vertex` is the smallest-index v whose
// test fails; it is absent for edgeless graphs (nothing to witness).
struct IdentifiabilityReport {
    bool identifiable = false;
    std::optional<int> failing_vertex;
    bool edgeless = false;
};

IdentifiabilityReport is_identifiable(const BipartiteGraph& g);

// The predicate applied to the materialized l-subgraph G(j); the reported
// failing vertex is translated back into g's coordinates.
IdentifiabilityReport is_lsubgraph_identifiable(const BipartiteGraph& g, std::span<const int> j);

} // namespace ids
