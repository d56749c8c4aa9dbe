#pragma once

#include "pancover/aclaw.hpp"
#include "pancover/model.hpp"
#include "pancover/policy.hpp"

namespace pancover {

/// One component of g - a together with its attachment vertices in a.
struct TutteBridge {
    VertexSet interior;
    VertexSet attachments;
};

std::vector<TutteBridge> tutte_bridges(const Graph& g, const VertexSet& a);

/// For a bridge with exactly two non-adjacent attachments {v, w}: whether some
/// cycle of the bridge-plus-attachments graph reaches {v, w} via two
/// vertex-disjoint (possibly empty) paths. Decided on the block-cut tree.
bool bridge_cycle_two_paths(const Graph& g, const TutteBridge& b);

/// Q-claw from a bridge with at least three attachments on the induced path q.
AClaw qclaw_from_bridge(const Graph& g, const std::vector<int>& q, const TutteBridge& b);

/// Verified diamond model inside g[V(b) + q-subpath], for a 2-attachment
/// bridge with non-adjacent attachments passing bridge_cycle_two_paths.
Model diamond_from_bridge_cycle(const Graph& g, const std::vector<int>& q, const TutteBridge& b);

/// Verified diamond model from two 2-attachment bridges whose minimal
/// q-windows share an edge.
Model diamond_from_bridge_pair(const Graph& g, const std::vector<int>& q, const TutteBridge& b1,
                               const TutteBridge& b2);

/// k disjoint diamond models from disjoint Q-claws via the regular partition
/// search. Throws PreconditionError("not enough structure") when the
/// subsequence search fails under the configured cap.
std::vector<Model> diamonds_from_qclaws(const Graph& g, const std::vector<int>& q,
                                        const std::vector<AClaw>& claws, int k,
                                        const ThresholdPolicy& policy);

}  // namespace pancover
