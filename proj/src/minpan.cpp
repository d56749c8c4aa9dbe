#include "pancover/minpan.hpp"

#include <algorithm>
#include <queue>

namespace pancover {

namespace {

void check_verified(const Graph& g, const PanSubdivision& pan, const char* where) {
    auto res = verify_model(g, Pattern::pan((int)pan.tail.size()), pan.to_model());
    if (!res) throw std::logic_error(std::string(where) + ": produced invalid model: " + res.reason);
}

struct MinPanScan {
    const Graph& g;
    int p;
    std::optional<PanSubdivision> best;
    bool stop = false;  // minimum possible order reached

    std::vector<char> ok_base;
    std::vector<int> dist, par;

    MinPanScan(const Graph& g_, int p_)
        : g(g_), p(p_), ok_base(g_.n()), dist(g_.n()), par(g_.n()) {}

    // For the fixed induced path seq = v1..vp w2, finds the best (w1, w3)
    // closing cycle: one BFS per w1 inside V - seq - N(seq), then every w3 is
    // read off the distance table through its neighbors.
    void try_tuple(const std::vector<int>& seq) {
        int w2 = seq.back();
        std::fill(ok_base.begin(), ok_base.end(), 1);
        for (int v : seq) {
            ok_base[v] = 0;
            for (int w : g.neighbors(v)) ok_base[w] = 0;
        }
        auto good_w = [&](int w) {
            for (size_t i = 0; i + 1 < seq.size(); ++i)
                if (seq[i] == w || g.has_edge(w, seq[i])) return false;
            return w != seq.back();
        };
        for (int w1 : g.neighbors(w2)) {
            if (stop) return;
            if (!good_w(w1)) continue;
            std::fill(dist.begin(), dist.end(), -1);
            std::queue<int> q;
            dist[w1] = 0;
            par[w1] = -1;
            q.push(w1);
            while (!q.empty()) {
                int x = q.front();
                q.pop();
                for (int y : g.neighbors(x))
                    if (ok_base[y] && dist[y] < 0) {
                        dist[y] = dist[x] + 1;
                        par[y] = x;
                        q.push(y);
                    }
            }
            for (int w3 : g.neighbors(w2)) {
                if (w3 == w1 || !good_w(w3)) continue;
                int d = -1, via = -1;
                if (g.has_edge(w1, w3)) {
                    d = 1;
                } else {
                    for (int y : g.neighbors(w3))
                        if (ok_base[y] && dist[y] >= 0 && (d < 0 || dist[y] + 1 < d)) {
                            d = dist[y] + 1;
                            via = y;
                        }
                }
                if (d < 0) continue;
                int order = p + 2 + d;
                if (best && best->order() <= order) continue;
                PanSubdivision pan;
                pan.tail.assign(seq.begin(), seq.end() - 1);
                pan.cycle = {w2, w1};
                if (d > 1) {
                    std::vector<int> mid;
                    for (int x = via; x != w1; x = par[x]) mid.push_back(x);
                    pan.cycle.insert(pan.cycle.end(), mid.rbegin(), mid.rend());
                    pan.cycle.push_back(w3);
                } else {
                    pan.cycle.push_back(w3);
                }
                best = std::move(pan);
                if (best->order() == p + 3) {
                    stop = true;
                    return;
                }
            }
        }
    }

    // Extends seq (an induced path) to length p+1; the last vertex plays w2.
    void extend(std::vector<int>& seq) {
        if (stop) return;
        if ((int)seq.size() == p + 1) {
            try_tuple(seq);
            return;
        }
        int tip = seq.back();
        for (int x : g.neighbors(tip)) {
            if (stop) return;
            if (std::find(seq.begin(), seq.end(), x) != seq.end()) continue;
            bool ok = true;
            for (size_t i = 0; i + 1 < seq.size() && ok; ++i)
                if (g.has_edge(x, seq[i])) ok = false;
            if (!ok) continue;
            seq.push_back(x);
            extend(seq);
            seq.pop_back();
        }
    }
};

}  // namespace

std::optional<PanSubdivision> find_min_pan(const Graph& g, int p) {
    if (p < 1) throw std::invalid_argument("p must be >= 1");
    MinPanScan scan(g, p);
    for (int v1 = 0; v1 < g.n() && !scan.stop; ++v1) {
        std::vector<int> seq = {v1};
        scan.extend(seq);
    }
    if (scan.best) check_verified(g, *scan.best, "find_min_pan");
    return scan.best;
}

PanSubdivision extract_pan1(const Graph& g, const std::vector<int>& c, int v) {
    int m = (int)c.size();
    if (m < 4) throw PreconditionError("extract_pan1: cycle too short");
    if (!is_induced_cycle_of(g, c)) throw PreconditionError("extract_pan1: cycle not induced");
    if (vset_contains(vset_sorted(c), v)) throw PreconditionError("extract_pan1: v on cycle");
    if (!g.has_edge(v, c[2]) || g.has_edge(v, c[0]) || g.has_edge(v, c[1]) || g.has_edge(v, c[3]))
        throw PreconditionError("extract_pan1: adjacency conditions violated");

    int i = -1;
    for (int j = 4; j < m; ++j)
        if (g.has_edge(v, c[j])) {
            i = j;
            break;
        }
    PanSubdivision pan;
    if (i < 0) {
        pan.tail = {v};
        pan.cycle.assign(c.begin() + 2, c.end());
        pan.cycle.insert(pan.cycle.end(), c.begin(), c.begin() + 2);
    } else {
        pan.tail = {c[1]};
        pan.cycle.assign(c.begin() + 2, c.begin() + i + 1);
        pan.cycle.push_back(v);
    }
    check_verified(g, pan, "extract_pan1");
    return pan;
}

PanSubdivision extract_pan2(const Graph& g, const std::vector<int>& c, const std::vector<int>& w) {
    int m = (int)c.size();
    if (m < 4 || w.size() != 4) throw PreconditionError("extract_pan2: bad input sizes");
    if (!is_induced_cycle_of(g, c)) throw PreconditionError("extract_pan2: cycle not induced");
    std::vector<int> hang = {c[1], w[0], w[1], w[2], w[3]};
    if (!is_induced_path_of(g, hang)) throw PreconditionError("extract_pan2: hanging path not induced");
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (g.has_edge(c[i], w[j]) && !(i == 1 && j == 0))
                throw PreconditionError("extract_pan2: extra edge between c[0..3] and w");
    for (int x : c) {
        int cnt = 0;
        for (int j = 0; j < 4; ++j) cnt += g.has_edge(x, w[j]);
        if (cnt > 1) throw PreconditionError("extract_pan2: cycle vertex with two w-neighbors");
    }

    auto finish = [&](PanSubdivision pan) {
        check_verified(g, pan, "extract_pan2");
        return pan;
    };

    // clean attachment: only edge between {w1, w2} and C is c[1]w[0]
    bool extra = false;
    for (int x : c)
        if ((g.has_edge(x, w[0]) || g.has_edge(x, w[1])) && x != c[1]) extra = true;
    if (!extra) {
        PanSubdivision pan;
        pan.tail = {w[1], w[0]};
        pan.cycle.assign(c.begin() + 1, c.end());
        pan.cycle.push_back(c[0]);
        return finish(std::move(pan));
    }

    int i = -1;  // last re-entry index
    for (int j = m - 1; j >= 4; --j)
        if (g.has_edge(c[j], w[0]) || g.has_edge(c[j], w[1])) {
            i = j;
            break;
        }
    if (i < 0) throw std::logic_error("extract_pan2: re-entry expected");

    PanSubdivision pan;
    if (i > 4) {
        pan.cycle = {c[1], w[0]};
        if (g.has_edge(c[i], w[1])) pan.cycle.push_back(w[1]);
        for (int j = i; j < m; ++j) pan.cycle.push_back(c[j]);
        pan.cycle.push_back(c[0]);
        pan.tail = {c[3], c[2]};
        return finish(std::move(pan));
    }
    if (m >= 7) {  // i == 4, long gap: cycle through c[1..4], pendant c[5], c[6]
        pan.cycle = {c[4]};
        if (g.has_edge(c[4], w[1])) pan.cycle.push_back(w[1]);
        pan.cycle.push_back(w[0]);
        pan.cycle.push_back(c[1]);
        pan.cycle.push_back(c[2]);
        pan.cycle.push_back(c[3]);
        pan.tail = {c[6], c[5]};
        return finish(std::move(pan));
    }
    if (m == 5) {
        if (g.has_edge(c[4], w[0])) {
            pan.cycle = {w[0], c[4], c[0], c[1]};
            pan.tail = {w[2], w[1]};
        } else {
            pan.cycle = {w[1], w[0], c[1], c[0], c[4]};
            pan.tail = {w[3], w[2]};
        }
        return finish(std::move(pan));
    }
    // m == 6
    if (g.has_edge(c[5], w[2])) {
        pan.cycle = {c[1], c[0], c[5], w[2], w[1], w[0]};
        pan.tail = {c[3], c[2]};
    } else if (g.has_edge(c[5], w[3])) {
        pan.cycle = {c[1], c[0], c[5], w[3], w[2], w[1], w[0]};
        pan.tail = {c[3], c[2]};
    } else if (g.has_edge(c[4], w[0])) {
        pan.cycle = {w[0], c[4], c[5], c[0], c[1]};
        pan.tail = {w[2], w[1]};
    } else {
        pan.cycle = {w[1], w[0], c[1], c[0], c[5], c[4]};
        pan.tail = {w[3], w[2]};
    }
    return finish(std::move(pan));
}

std::vector<int> induced_cycle_keeping_marked_edge(const Graph& g, std::vector<int> cycle,
                                                   const Graph& marked) {
    auto arc_has_marked = [&](const std::vector<int>& c, int from, int to) {
        // edges c[from..to] consecutive
        for (int j = from; j < to; ++j)
            if (marked.has_edge(c[j], c[j + 1])) return true;
        return false;
    };
    while (true) {
        int m = (int)cycle.size();
        int ci = -1, cj = -1;
        for (int i = 0; i < m && ci < 0; ++i)
            for (int j = i + 2; j < m; ++j) {
                if (i == 0 && j == m - 1) continue;
                if (g.has_edge(cycle[i], cycle[j])) {
                    ci = i;
                    cj = j;
                    break;
                }
            }
        if (ci < 0) break;
        bool chord_marked = marked.has_edge(cycle[ci], cycle[cj]);
        std::vector<int> side_a(cycle.begin() + ci, cycle.begin() + cj + 1);
        std::vector<int> side_b(cycle.begin() + cj, cycle.end());
        side_b.insert(side_b.end(), cycle.begin(), cycle.begin() + ci + 1);
        if (chord_marked || arc_has_marked(cycle, ci, cj))
            cycle = std::move(side_a);
        else
            cycle = std::move(side_b);
    }
    // sanity: a marked edge must be present
    bool has = false;
    for (size_t i = 0; i < cycle.size(); ++i)
        if (marked.has_edge(cycle[i], cycle[(i + 1) % cycle.size()])) has = true;
    if (!has) throw std::logic_error("induced_cycle_keeping_marked_edge: lost all marked edges");
    return cycle;
}

}  // namespace pancover
