#include "pancover/regular.hpp"

#include <algorithm>
#include <functional>

namespace pancover {

namespace {

std::vector<VertexSet> traces(const std::vector<VertexSet>& seq, int s, int e) {
    std::vector<VertexSet> out;
    for (const auto& a : seq) {
        VertexSet t;
        for (int x : a)
            if (x >= s && x <= e) t.push_back(x);
        out.push_back(std::move(t));
    }
    return out;
}

bool tag_holds(const std::vector<VertexSet>& tr, RpTag tag) {
    size_t l = tr.size();
    if (tr[0].empty()) return false;
    for (size_t j = 1; j < l; ++j)
        if (tr[j].size() != tr[0].size()) return false;
    switch (tag) {
        case RpTag::RP1:
            for (size_t j = 1; j < l; ++j)
                if (tr[j] != tr[0]) return false;
            return true;
        case RpTag::RP2:
            for (size_t j = 0; j + 1 < l; ++j)
                if (tr[j].back() >= tr[j + 1].front()) return false;
            return true;
        case RpTag::RP3:
            for (size_t j = 0; j + 1 < l; ++j)
                if (tr[j + 1].back() >= tr[j].front()) return false;
            return true;
    }
    return false;
}

std::optional<RpTag> some_tag(const std::vector<VertexSet>& tr) {
    for (RpTag t : {RpTag::RP1, RpTag::RP2, RpTag::RP3})
        if (tag_holds(tr, t)) return t;
    return std::nullopt;
}

// Searches for a regular partition of order <= n for the given sequence;
// ascending order first, then lexicographic cut positions.
std::optional<RegularPartition> find_partition(const std::vector<VertexSet>& seq, int n) {
    VertexSet xs;
    for (const auto& a : seq)
        for (int x : a) xs.push_back(x);
    xs = vset_sorted(std::move(xs));
    if (xs.empty()) return std::nullopt;
    int lo = xs.front(), hi = xs.back();
    std::vector<int> cands(xs.begin() + 1, xs.end());  // a part may start at any coordinate

    std::vector<int> chosen;
    std::optional<RegularPartition> found;
    auto try_current = [&]() -> bool {
        RegularPartition part;
        part.lo = lo;
        part.hi = hi;
        part.cuts = chosen;
        int start = lo;
        for (size_t j = 0; j <= chosen.size(); ++j) {
            int end = j < chosen.size() ? chosen[j] - 1 : hi;
            auto tag = some_tag(traces(seq, start, end));
            if (!tag) return false;
            part.tags.push_back(*tag);
            start = end + 1;
        }
        found = std::move(part);
        return true;
    };
    // order 1 first, then 2, ... up to n
    for (int parts = 1; parts <= n && !found; ++parts) {
        int need = parts - 1;
        std::vector<int> idx(need);
        std::function<bool(int, int)> rec = [&](int d, int from) -> bool {
            if (d == need) {
                chosen.clear();
                for (int i : idx) chosen.push_back(cands[i]);
                return try_current();
            }
            for (int i = from; i < (int)cands.size(); ++i) {
                idx[d] = i;
                if (rec(d + 1, i + 1)) return true;
            }
            return false;
        };
        rec(0, 0);
    }
    return found;
}

}  // namespace

bool check_regular_partition(const std::vector<VertexSet>& seq, const RegularPartition& part) {
    if (seq.empty() || part.tags.size() != part.cuts.size() + 1) return false;
    int start = part.lo;
    for (size_t j = 0; j < part.tags.size(); ++j) {
        int end = j < part.cuts.size() ? part.cuts[j] - 1 : part.hi;
        if (end < start) return false;
        if (!tag_holds(traces(seq, start, end), part.tags[j])) return false;
        start = end + 1;
    }
    // parts must cover all elements
    for (const auto& a : seq)
        for (int x : a)
            if (x < part.lo || x > part.hi) return false;
    return true;
}

std::optional<RegularSubsequence> find_regular_subsequence(const std::vector<VertexSet>& seq,
                                                           int n, int l, long long cap) {
    if ((long long)seq.size() > cap)
        throw PreconditionError("find_regular_subsequence: collection exceeds the configured cap");
    for (const auto& a : seq)
        if ((int)a.size() != n)
            throw PreconditionError("find_regular_subsequence: set size mismatch");
    if ((int)seq.size() < l) return std::nullopt;

    std::vector<int> pick;
    std::vector<VertexSet> sub;
    std::optional<RegularSubsequence> out;
    std::function<bool(int)> rec = [&](int from) -> bool {
        if (!sub.empty()) {
            auto part = find_partition(sub, n);  // prefix-monotone prune
            if (!part) return false;
            if ((int)sub.size() == l) {
                out = RegularSubsequence{pick, std::move(*part)};
                return true;
            }
        }
        int remaining = l - (int)sub.size();
        for (int i = from; (int)seq.size() - i >= remaining; ++i) {
            pick.push_back(i);
            sub.push_back(seq[i]);
            bool done = rec(i + 1);
            pick.pop_back();
            sub.pop_back();
            if (done) return true;
        }
        return false;
    };
    rec(0);
    return out;
}

}  // namespace pancover
