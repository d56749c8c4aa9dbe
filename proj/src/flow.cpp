#include "pancover/flow.hpp"

#include <queue>

namespace pancover {

namespace {

struct FlowNet {
    struct Arc {
        int to, cap, flow = 0;
    };
    std::vector<Arc> arcs;
    std::vector<std::vector<int>> out;

    explicit FlowNet(int n) : out(n) {}
    void add(int a, int b, int cap) {
        out[a].push_back((int)arcs.size());
        arcs.push_back({b, cap});
        out[b].push_back((int)arcs.size());
        arcs.push_back({a, 0});
    }
    int residual(int id) const { return arcs[id].cap - arcs[id].flow; }

    bool augment(int s, int t) {
        std::vector<int> pre(out.size(), -1);
        std::vector<char> vis(out.size(), 0);
        std::queue<int> q;
        vis[s] = 1;
        q.push(s);
        while (!q.empty() && !vis[t]) {
            int x = q.front();
            q.pop();
            for (int id : out[x]) {
                if (residual(id) <= 0) continue;
                int y = arcs[id].to;
                if (vis[y]) continue;
                vis[y] = 1;
                pre[y] = id;
                q.push(y);
            }
        }
        if (!vis[t]) return false;
        for (int y = t; y != s;) {
            int id = pre[y];
            arcs[id].flow += 1;
            arcs[id ^ 1].flow -= 1;
            y = arcs[id ^ 1].to;
        }
        return true;
    }
};

}  // namespace

std::vector<std::vector<int>> vertex_disjoint_paths(const Graph& g, int src,
                                                    const VertexSet& targets, int want) {
    int n = g.n();
    auto in_node = [](int v) { return 2 * v; };
    auto out_node = [](int v) { return 2 * v + 1; };
    int S = 2 * n, T = 2 * n + 1;
    FlowNet net(2 * n + 2);
    std::vector<char> is_t(n, 0);
    for (int t : targets) is_t[t] = 1;
    for (int v = 0; v < n; ++v) net.add(in_node(v), out_node(v), v == src ? want : 1);
    for (auto [u, v] : g.edges()) {
        if (!is_t[u]) net.add(out_node(u), in_node(v), 1);
        if (!is_t[v]) net.add(out_node(v), in_node(u), 1);
    }
    net.add(S, in_node(src), want);
    for (int t : targets)
        if (t != src) net.add(out_node(t), T, 1);

    int flow = 0;
    while (flow < want && net.augment(S, T)) ++flow;

    // trace unit paths along flow arcs (only src's own arcs carry flow > 1,
    // and tracing starts past them)
    std::vector<std::vector<int>> paths;
    std::vector<std::vector<int>> next_arc(2 * n + 2);
    for (size_t id = 0; id < net.arcs.size(); id += 2)
        if (net.arcs[id].flow > 0) next_arc[net.arcs[id ^ 1].to].push_back((int)id);
    for (int k = 0; k < flow; ++k) {
        std::vector<int> path = {src};
        int node = out_node(src);
        while (true) {
            int id = next_arc[node].back();
            next_arc[node].pop_back();
            int to = net.arcs[id].to;
            if (to == T) break;
            int v = to / 2;  // to == in_node(v)
            path.push_back(v);
            next_arc[in_node(v)].pop_back();  // consume the internal arc
            node = out_node(v);
        }
        paths.push_back(std::move(path));
    }
    return paths;
}

}  // namespace pancover
