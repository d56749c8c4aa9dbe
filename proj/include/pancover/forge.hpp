#pragma once

#include <map>

#include "pancover/model.hpp"

namespace pancover {

/// A generated graph with named vertex roles and the parameters that built it.
/// Roles keep insertion order so serialization is reproducible byte for byte.
struct LabeledGraph {
    Graph graph;
    std::string family;
    std::map<std::string, int> params;
    std::vector<std::tuple<std::string, int, int>> roles;  // (name, index, vertex)

    void add_role(const std::string& name, int index, int vertex) {
        roles.push_back({name, index, vertex});
    }
    /// All vertices recorded under (name, index), in insertion order.
    std::vector<int> role_all(const std::string& name, int index) const;
    /// The unique vertex under (name, index).
    int role_at(const std::string& name, int index) const;
};

std::string serialize_labeled(const LabeledGraph& lg);
LabeledGraph parse_labeled(std::istream& in);

// ---- generators -----------------------------------------------------------

LabeledGraph garland(int n);        // 3n vertices, chain of n triangles
LabeledGraph triangle_wall(int n);  // Gamma_n, 6n^2 vertices

/// Counterexample host for K_{2,r}-subdivisions: Gamma_{rn} plus 2n apexes.
LabeledGraph build_k2r_ce(int r, int n);

/// Counterexample host for a forest with two branch vertices in one component.
LabeledGraph build_forest_ce(const Pattern& h, int n);

/// The bipartite incidence graph of U_{2k-1,k} with its hyperedge paths.
LabeledGraph build_ub(int k, int path_cap = 200);

/// Counterexample host for patterns with a long induced cycle, or a cycle
/// plus two adjacent far vertices; built over UB_n.
LabeledGraph build_longcycle_ce(const Pattern& h, int n, int path_cap = 200);

LabeledGraph build_semigrid(int n);  // SG_n, n(n+1)/2 vertices

/// Counterexample host for patterns with a cycle plus three far vertices;
/// built over SG_n.
LabeledGraph build_3far_ce(const Pattern& h, int n);

// ---- witnesses ------------------------------------------------------------

/// Constructively routes an induced model of the family's target pattern
/// avoiding x (witnessing that small removal sets cannot hit every model).
/// The pattern
/// argument is required for the forest/hyper/semigrid families (the h the
/// host was built for) and ignored for k2r.
Model witness_avoiding(const LabeledGraph& lg, const Pattern* h, const VertexSet& x);

/// The pattern a family's witnesses are models of (K_{2,r} for k2r; h itself
/// otherwise).
Pattern family_pattern(const LabeledGraph& lg, const Pattern* h);

// helpers shared with tests
bool has_two_branch_vertices_in_component(const Graph& forest);
std::optional<std::vector<int>> find_induced_cycle_min_len(const Graph& h, int min_len);
std::optional<std::pair<std::vector<int>, std::vector<int>>> find_cycle_with_far_set(
    const Graph& h, int far_count, bool far_adjacent_pair);

}  // namespace pancover
