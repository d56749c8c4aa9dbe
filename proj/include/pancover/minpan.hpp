#pragma once

#include "pancover/model.hpp"

namespace pancover {

/// Minimum-order induced subdivision of the p-pan, or nullopt when none
/// exists. Scans (p+3)-tuples deterministically; among minimum-order results
/// the first one in scan order wins.
std::optional<PanSubdivision> find_min_pan(const Graph& g, int p);

/// Given an induced cycle c = v1..vm (m >= 4) and a vertex v adjacent to c[2]
/// and non-adjacent to c[0], c[1], c[3], returns a verified induced 1-pan
/// subdivision inside g[V(c) + v].
PanSubdivision extract_pan1(const Graph& g, const std::vector<int>& c, int v);

/// Given an induced cycle c and w = w1..w4 with c[1] w1 w2 w3 w4 an induced
/// path, c[1]w1 the only edge between {c[0..3]} and w, and every cycle vertex
/// having at most one neighbor in w, returns a verified induced 2-pan
/// subdivision inside g[V(c) + w].
PanSubdivision extract_pan2(const Graph& g, const std::vector<int>& c, const std::vector<int>& w);

/// Shortcuts across chords of `cycle` (a cycle of g, chords allowed), always
/// keeping a side that contains an edge of `marked`; the result is a chordless
/// cycle of g containing a marked edge, never longer than the input.
std::vector<int> induced_cycle_keeping_marked_edge(const Graph& g, std::vector<int> cycle,
                                                   const Graph& marked);

}  // namespace pancover
