#pragma once

#include "pancover/model.hpp"

namespace pancover {

constexpr long long kDefaultModelBudget = 10'000'000;

/// Exponential-time generic model search (oracle-grade). Deterministic:
/// branch placements and path extensions scan host vertices in ascending
/// order, first hit wins. Throws BudgetExceeded when the node budget runs out.
std::optional<Model> find_model(const Graph& g, const Pattern& h,
                                long long budget = kDefaultModelBudget);

/// As find_model, but only accepts models whose vertex set is all of V(g).
std::optional<Model> find_spanning_model(const Graph& g, const Pattern& h,
                                         long long budget = kDefaultModelBudget);

}  // namespace pancover
