#pragma once

#include "pancover/aclaw.hpp"
#include "pancover/model.hpp"

namespace pancover {

/// Turns a Q-claw on an induced path into a verified induced diamond
/// subdivision inside g[V(claw) + V(q)], resolving violating edges by the
/// shrink-and-recurse case analysis.
Model diamond_from_qclaw(const Graph& g, const std::vector<int>& q, const AClaw& claw);

/// Whether g contains an induced subdivision of the diamond; returns a
/// verified model when it does. Iterates over anchored 4-tuples and tests
/// three internally disjoint paths by unit-capacity flow.
std::optional<Model> detect_diamond(const Graph& g);

}  // namespace pancover
