#include "pancover/graph.hpp"

#include <algorithm>
#include <istream>
#include <queue>
#include <sstream>

namespace pancover {

Graph::Graph(int n) : n_(n), words_((n + 63) / 64), adj_(n), bits_((size_t)n * ((n + 63) / 64), 0) {}

void Graph::add_edge(int u, int v) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_) throw std::out_of_range("vertex out of range");
    if (u == v) throw std::invalid_argument("loop");
    if (has_edge(u, v)) throw std::invalid_argument("parallel edge");
    auto& au = adj_[u];
    au.insert(std::lower_bound(au.begin(), au.end(), v), v);
    auto& av = adj_[v];
    av.insert(std::lower_bound(av.begin(), av.end(), u), u);
    bits_[(size_t)u * words_ + (size_t)(v >> 6)] |= uint64_t(1) << (v & 63);
    bits_[(size_t)v * words_ + (size_t)(u >> 6)] |= uint64_t(1) << (u & 63);
    ++m_;
}

Graph Graph::from_edges(int n, std::vector<std::pair<int, int>> edges) {
    Graph g(n);
    for (auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n) throw std::out_of_range("vertex out of range");
        if (u == v) throw std::invalid_argument("loop");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    auto dup = std::adjacent_find(edges.begin(), edges.end());
    if (dup != edges.end()) throw std::invalid_argument("parallel edge");
    for (auto [u, v] : edges) {
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
        g.bits_[(size_t)u * g.words_ + (size_t)(v >> 6)] |= uint64_t(1) << (v & 63);
        g.bits_[(size_t)v * g.words_ + (size_t)(u >> 6)] |= uint64_t(1) << (u & 63);
    }
    for (auto& a : g.adj_) std::sort(a.begin(), a.end());
    g.m_ = (int)edges.size();
    return g;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> es;
    es.reserve(m_);
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u])
            if (u < v) es.push_back({u, v});
    return es;
}

VertexSet vset_sorted(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

bool vset_contains(const VertexSet& s, int v) {
    return std::binary_search(s.begin(), s.end(), v);
}

VertexSet vset_union(const VertexSet& a, const VertexSet& b) {
    VertexSet r;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

VertexSet vset_minus(const VertexSet& a, const VertexSet& b) {
    VertexSet r;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

VertexSet vset_intersect(const VertexSet& a, const VertexSet& b) {
    VertexSet r;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

bool vsets_disjoint(const VertexSet& a, const VertexSet& b) {
    return vset_intersect(a, b).empty();
}

SubgraphResult induced_subgraph(const Graph& g, const VertexSet& s) {
    std::vector<int> pos(g.n(), -1);
    for (size_t i = 0; i < s.size(); ++i) {
        int v = s[i];
        if (v < 0 || v >= g.n()) throw std::out_of_range("vertex out of range");
        pos[v] = (int)i;
    }
    Graph h((int)s.size());
    for (size_t i = 0; i < s.size(); ++i)
        for (int w : g.neighbors(s[i]))
            if (pos[w] > (int)i) h.add_edge((int)i, pos[w]);
    return {std::move(h), s};
}

SubgraphResult remove_vertices(const Graph& g, const VertexSet& x) {
    VertexSet all(g.n());
    for (int i = 0; i < g.n(); ++i) all[i] = i;
    return induced_subgraph(g, vset_minus(all, x));
}

Graph remove_edges(const Graph& g, const std::vector<std::pair<int, int>>& es) {
    Graph h(g.n());
    Graph mask(g.n());
    for (auto [u, v] : es)
        if (!mask.has_edge(u, v)) mask.add_edge(u, v);
    for (auto [u, v] : g.edges())
        if (!mask.has_edge(u, v)) h.add_edge(u, v);
    return h;
}

Graph complete_graph(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

Graph cycle_graph(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Graph path_graph(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

VertexSet r_neighborhood(const Graph& g, const VertexSet& s, int r) {
    std::vector<int> dist(g.n(), -1);
    std::queue<int> q;
    for (int v : s) {
        if (v < 0 || v >= g.n()) throw std::out_of_range("vertex out of range");
        dist[v] = 0;
        q.push(v);
    }
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        if (dist[v] == r) continue;
        for (int w : g.neighbors(v))
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                q.push(w);
            }
    }
    VertexSet out;
    for (int v = 0; v < g.n(); ++v)
        if (dist[v] >= 0 && dist[v] <= r) out.push_back(v);
    return out;
}

std::vector<VertexSet> components(const Graph& g) {
    std::vector<int> comp(g.n(), -1);
    std::vector<VertexSet> out;
    for (int s = 0; s < g.n(); ++s) {
        if (comp[s] >= 0) continue;
        int id = (int)out.size();
        out.push_back({});
        std::queue<int> q;
        q.push(s);
        comp[s] = id;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            out[id].push_back(v);
            for (int w : g.neighbors(v))
                if (comp[w] < 0) {
                    comp[w] = id;
                    q.push(w);
                }
        }
        std::sort(out[id].begin(), out[id].end());
    }
    return out;
}

bool is_connected(const Graph& g) { return g.n() <= 1 || components(g).size() == 1; }

std::vector<int> bfs_dist(const Graph& g, int src) {
    std::vector<int> dist(g.n(), -1);
    std::queue<int> q;
    dist[src] = 0;
    q.push(src);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : g.neighbors(v))
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                q.push(w);
            }
    }
    return dist;
}

std::vector<int> shortest_path_within(const Graph& g, int u, int v, const VertexSet& allowed) {
    std::vector<char> ok(g.n(), 0);
    for (int w : allowed) ok[w] = 1;
    if (!ok[u] || !ok[v]) return {};
    std::vector<int> par(g.n(), -2);
    std::queue<int> q;
    par[u] = -1;
    q.push(u);
    while (!q.empty()) {
        int x = q.front();
        q.pop();
        if (x == v) break;
        for (int w : g.neighbors(x))
            if (ok[w] && par[w] == -2) {
                par[w] = x;
                q.push(w);
            }
    }
    if (par[v] == -2) return {};
    std::vector<int> path;
    for (int x = v; x != -1; x = par[x]) path.push_back(x);
    std::reverse(path.begin(), path.end());
    return path;
}

bool is_path_of(const Graph& g, const std::vector<int>& p) {
    if (p.empty()) return false;
    VertexSet s = vset_sorted(p);
    if (s.size() != p.size()) return false;
    for (size_t i = 0; i + 1 < p.size(); ++i)
        if (!g.has_edge(p[i], p[i + 1])) return false;
    return true;
}

bool is_induced_path_of(const Graph& g, const std::vector<int>& p) {
    if (!is_path_of(g, p)) return false;
    for (size_t i = 0; i < p.size(); ++i)
        for (size_t j = i + 2; j < p.size(); ++j)
            if (g.has_edge(p[i], p[j])) return false;
    return true;
}

bool is_cycle_of(const Graph& g, const std::vector<int>& c) {
    if (c.size() < 3) return false;
    if (!is_path_of(g, c)) return false;
    return g.has_edge(c.back(), c.front());
}

bool is_induced_cycle_of(const Graph& g, const std::vector<int>& c) {
    if (!is_cycle_of(g, c)) return false;
    size_t m = c.size();
    for (size_t i = 0; i < m; ++i)
        for (size_t j = i + 2; j < m; ++j) {
            if (i == 0 && j == m - 1) continue;
            if (g.has_edge(c[i], c[j])) return false;
        }
    return true;
}

Graph parse_graph(std::istream& in, const std::string& kind) {
    std::string line;
    int ln = 0;
    bool header = false;
    int n = 0, m = 0, seen = 0;
    Graph g;
    while (std::getline(in, line)) {
        ++ln;
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream iss(line);
        std::string tag;
        iss >> tag;
        if (!header) {
            std::string k;
            if (tag != "p" || !(iss >> k >> n >> m) || k != kind || n < 0 || m < 0)
                throw ParseError(ln, "malformed header (expected \"p " + kind + " <n> <m>\")");
            std::string rest;
            if (iss >> rest) throw ParseError(ln, "trailing tokens after header");
            g = Graph(n);
            header = true;
        } else if (tag == "e") {
            int u, v;
            if (!(iss >> u >> v)) throw ParseError(ln, "malformed edge line");
            std::string rest;
            if (iss >> rest) throw ParseError(ln, "trailing tokens after edge");
            if (u < 1 || u > n || v < 1 || v > n) throw ParseError(ln, "endpoint out of range");
            if (u == v) throw ParseError(ln, "loop not allowed");
            if (u > v) throw ParseError(ln, "endpoints must satisfy u < v");
            if (g.has_edge(u - 1, v - 1)) throw ParseError(ln, "duplicate edge");
            g.add_edge(u - 1, v - 1);
            ++seen;
        } else {
            throw ParseError(ln, "unknown line type \"" + tag + "\"");
        }
    }
    if (!header) throw ParseError(ln, "missing header");
    if (seen != m) throw ParseError(ln, "edge count mismatch with header");
    return g;
}

Graph parse_graph_string(const std::string& text, const std::string& kind) {
    std::istringstream iss(text);
    return parse_graph(iss, kind);
}

std::string serialize_graph(const Graph& g, const std::string& kind) {
    std::ostringstream out;
    out << "p " << kind << " " << g.n() << " " << g.edge_count() << "\n";
    for (auto [u, v] : g.edges()) out << "e " << u + 1 << " " << v + 1 << "\n";
    return out.str();
}

}  // namespace pancover
