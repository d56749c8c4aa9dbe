#include "pancover/simonovits.hpp"

#include <algorithm>

namespace pancover {

std::vector<std::vector<int>> simonovits_pack(const MultiGraph& m, int k,
                                              const ThresholdPolicy& policy) {
    {
        auto core0 = cubic_core(m);
        if (core0.core.n == 0 || core0.core.n < policy.simonovits(k))
            throw PreconditionError("insufficient graph: cubic core below the simonovits threshold");
    }
    MultiGraph cur = m;
    std::vector<char> dead(m.n, 0);
    std::vector<std::vector<int>> cycles;
    while ((int)cycles.size() < k) {
        auto cr = cubic_core(cur);
        std::vector<int> lifted;
        if (cr.core.n > 0) {
            auto z = shortest_cycle(cr.core);
            if (!z) throw std::logic_error("simonovits: min-degree-3 core without a cycle");
            lifted = cr.lift_cycle(*z);
        } else {
            // an empty core can still hide cycles (the remainder may be a bare
            // cycle); peel them directly
            auto z = shortest_cycle(cur);
            if (!z) throw PreconditionError("insufficient graph: peeling stalled");
            MultiCycle mc = *z;
            lifted = mc.verts;
        }
        cycles.push_back(lifted);
        for (int v : lifted) dead[v] = 1;
        MultiGraph nxt(m.n);
        for (auto [u, v] : cur.edges)
            if (!dead[u] && !dead[v]) nxt.edges.push_back({u, v});
        cur = std::move(nxt);
    }
    return cycles;
}

}  // namespace pancover
