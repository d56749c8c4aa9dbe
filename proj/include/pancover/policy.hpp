#pragma once

#include <map>
#include <string>

namespace pancover {

/// Every numeric threshold in one configurable place. All "log" means log2.
/// Each key can be pinned to a flat value; unset keys use the formulas.
/// Per-k log terms are floored at 1 so the algorithms stay total at k = 1.
struct ThresholdPolicy {
    std::map<std::string, long long> overrides;
    long long ncap_coeff = 64;  // N_cap(n, l) = ncap_coeff * l^3 by default

    long long simonovits(int k) const;  // ceil(24 k log k)
    long long apaths1(int k) const;     // ceil(108 k log k)
    long long apaths2(int k) const;     // ceil(396 k log k)
    long long mu1(int k) const;         // ceil(216 k log k) + 12k - 11
    long long mu2(int k) const;         // ceil(792 k log k) + 25k - 23
    long long ncap(int n, int l) const;
    long long aclaw_cover(int k) const;  // 14k
    long long g2(int k) const;           // 14 N(3,3k) + N(2,3k) + 16 N(4,3k) + 2k
    long long g1(int k) const;           // 3 g2(k)
    long long g(int k) const;            // k g1(k)

    void set(const std::string& key, long long value);
    /// Space-separated key=value block at a given k, echoed into certificates.
    std::string echo(int k) const;
};

}  // namespace pancover
