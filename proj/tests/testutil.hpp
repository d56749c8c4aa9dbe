#pragma once

#include <cstdint>
#include <random>

#include "pancover/graph.hpp"
#include "pancover/multigraph.hpp"

namespace pancover::testutil {

Graph from_edges(int n, const std::vector<std::pair<int, int>>& es);
Graph random_graph(int n, double p, std::mt19937& rng);
MultiGraph random_cubic_multigraph(int n, std::mt19937& rng);  // n even

// Canonical form: minimal packed adjacency bits over all vertex orders.
uint64_t canonical_form(const Graph& g);  // n <= 11

// Non-isomorphic graphs on exactly n vertices (n <= 8 practical).
const std::vector<Graph>& all_graphs(int n);
std::vector<Graph> all_connected_graphs(int n);
std::vector<Graph> all_trees(int n);  // n <= 11 practical

// independent brute-force oracles
int brute_max_matching(const Graph& g);
bool is_pan_subdiv_set(const Graph& g, const VertexSet& s, int p);
int brute_min_pan_order(const Graph& g, int p);  // -1 when none
std::vector<VertexSet> all_apath_sets(const Graph& g, const VertexSet& a);
int brute_max_apaths(const Graph& g, const VertexSet& a);
bool brute_has_aclaw(const Graph& g, const VertexSet& a);
int brute_girth(const Graph& g);       // -1 for forests
long long count_cycles(const Graph& g);
int max_disjoint_sets(const std::vector<VertexSet>& family, int n);

}  // namespace pancover::testutil
