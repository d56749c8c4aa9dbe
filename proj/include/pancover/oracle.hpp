#pragma once

#include "pancover/certificate.hpp"

namespace pancover {

/// Ground truth for nu and tau on desk-scale instances.
struct DualityReport {
    int nu = 0;
    int tau = 0;
    std::vector<VertexSet> nu_witness;  // disjoint model vertex sets
    VertexSet tau_witness;
    long long nodes = 0;  // search statistics
};

struct OracleOptions {
    long long budget = 10'000'000;  // search-node expansions per call
};

/// Maximum number of vertex-disjoint induced subdivisions of the pattern,
/// with a witness packing. Throws BudgetExceeded rather than guessing.
DualityReport nu_exact(const Graph& g, const Pattern& h, const OracleOptions& opt = {});

/// Minimum hitting set for all induced subdivisions of the pattern.
DualityReport tau_exact(const Graph& g, const Pattern& h, const OracleOptions& opt = {});

/// Both at once (shares the model enumeration).
DualityReport duality_report(const Graph& g, const Pattern& h, const OracleOptions& opt = {});

/// Greedy exact solver for patterns whose components are paths or subdivided
/// stars: k disjoint copies or a cover of size at most nu * |h|.
Certificate solve_star_forest(const Graph& g, const Pattern& h, int k,
                              const OracleOptions& opt = {});

/// True iff every component of the pattern has at most one vertex of degree
/// greater than 2 (paths and subdivided stars).
bool is_star_forest_pattern(const Pattern& h);

}  // namespace pancover
