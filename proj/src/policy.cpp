#include "pancover/policy.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace pancover {

namespace {

long long ceil_klogk(int k, int coeff) {
    if (k <= 1) return 0;
    double v = (double)coeff * k * std::log2((double)k);
    return (long long)std::ceil(v - 1e-9);
}

}  // namespace

long long ThresholdPolicy::simonovits(int k) const {
    if (auto it = overrides.find("simonovits"); it != overrides.end()) return it->second;
    return std::max(1LL, ceil_klogk(k, 24));
}

long long ThresholdPolicy::apaths1(int k) const {
    if (auto it = overrides.find("apaths1"); it != overrides.end()) return it->second;
    return std::max(1LL, ceil_klogk(k, 108));
}

long long ThresholdPolicy::apaths2(int k) const {
    if (auto it = overrides.find("apaths2"); it != overrides.end()) return it->second;
    return std::max(1LL, ceil_klogk(k, 396));
}

long long ThresholdPolicy::mu1(int k) const {
    if (auto it = overrides.find("mu1"); it != overrides.end()) return it->second;
    return ceil_klogk(k, 216) + 12LL * k - 11;
}

long long ThresholdPolicy::mu2(int k) const {
    if (auto it = overrides.find("mu2"); it != overrides.end()) return it->second;
    return ceil_klogk(k, 792) + 25LL * k - 23;
}

long long ThresholdPolicy::ncap(int n, int l) const {
    auto it = overrides.find("ncap" + std::to_string(n));
    long long v = it != overrides.end() ? it->second : ncap_coeff * (long long)l * l * l;
    return std::max<long long>(l, v);  // the subsequence search needs at least l sets
}

long long ThresholdPolicy::aclaw_cover(int k) const {
    if (auto it = overrides.find("aclaw_cover"); it != overrides.end()) return it->second;
    return 14LL * k;
}

long long ThresholdPolicy::g2(int k) const {
    if (auto it = overrides.find("g2"); it != overrides.end()) return it->second;
    return 14 * ncap(3, 3 * k) + ncap(2, 3 * k) + 16 * ncap(4, 3 * k) + 2LL * k;
}

long long ThresholdPolicy::g1(int k) const {
    if (auto it = overrides.find("g1"); it != overrides.end()) return it->second;
    return 3 * g2(k);
}

long long ThresholdPolicy::g(int k) const {
    if (auto it = overrides.find("g"); it != overrides.end()) return it->second;
    return (long long)k * g1(k);
}

void ThresholdPolicy::set(const std::string& key, long long value) {
    static const char* keys[] = {"simonovits", "apaths1", "apaths2", "mu1",  "mu2", "ncap2",
                                 "ncap3",      "ncap4",   "aclaw_cover", "g2", "g1",  "g"};
    for (const char* k : keys)
        if (key == k) {
            if (value < 1) throw std::invalid_argument("policy values must be positive");
            overrides[key] = value;
            return;
        }
    throw std::invalid_argument("unknown policy key: " + key);
}

std::string ThresholdPolicy::echo(int k) const {
    std::ostringstream os;
    os << "simonovits=" << simonovits(k) << " apaths1=" << apaths1(k) << " apaths2=" << apaths2(k)
       << " mu1=" << mu1(k) << " mu2=" << mu2(k) << " ncap2=" << ncap(2, 3 * k)
       << " ncap3=" << ncap(3, 3 * k) << " ncap4=" << ncap(4, 3 * k)
       << " aclaw_cover=" << aclaw_cover(k) << " g2=" << g2(k) << " g1=" << g1(k) << " g=" << g(k);
    return os.str();
}

}  // namespace pancover
