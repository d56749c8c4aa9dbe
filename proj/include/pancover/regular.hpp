#pragma once

#include "pancover/graph.hpp"

namespace pancover {

enum class RpTag { RP1, RP2, RP3 };

/// Interval partition of [lo, hi]: part 0 is [lo, cuts[0]-1], part j starts at
/// cuts[j-1], the last part ends at hi. One tag per part.
struct RegularPartition {
    int lo = 0, hi = 0;
    std::vector<int> cuts;
    std::vector<RpTag> tags;
    int order() const { return (int)tags.size(); }
};

/// True iff every part satisfies its tag literally for the given sequence of
/// coordinate sets: RP1 all traces equal and nonempty; RP2 equal positive
/// sizes with blocks increasing in sequence order; RP3 decreasing.
bool check_regular_partition(const std::vector<VertexSet>& seq, const RegularPartition& part);

struct RegularSubsequence {
    std::vector<int> indices;  // ascending positions into the input sequence
    RegularPartition partition;
};

/// Exact search for a length-l subsequence admitting a regular partition of
/// order at most n. Every input set must have exactly n elements; |seq| must
/// not exceed `cap`. Lexicographically first subsequence wins; partitions are
/// searched by ascending order then cut positions.
std::optional<RegularSubsequence> find_regular_subsequence(const std::vector<VertexSet>& seq,
                                                           int n, int l, long long cap);

}  // namespace pancover
