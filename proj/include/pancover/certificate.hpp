#pragma once

#include "pancover/model.hpp"
#include "pancover/policy.hpp"

namespace pancover {

/// Machine-checkable outcome of a solver run: either k disjoint induced
/// subdivisions (their full vertex sets) or one hitting set.
struct Certificate {
    enum class Kind { Packing, Cover } kind;
    std::string pattern;  // pan1 | pan2 | diamond | custom
    int k = 0;            // packing size (Packing only)
    std::vector<VertexSet> groups;
    VertexSet cover;
    std::string policy_echo;

    static Certificate packing(std::string pattern, std::vector<VertexSet> groups,
                               std::string echo);
    static Certificate cover_of(std::string pattern, VertexSet x, std::string echo);
};

std::string serialize_certificate(const Certificate& c);
Certificate parse_certificate(std::istream& in);
Certificate parse_certificate_string(const std::string& text);

/// Re-derives everything the certificate claims: packing groups are pairwise
/// disjoint exact induced subdivisions, covers leave the host pattern-free.
VerifyResult verify_certificate(const Graph& g, const Pattern& pat, const Certificate& c,
                                long long budget = 10'000'000);

}  // namespace pancover
