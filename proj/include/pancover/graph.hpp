#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace pancover {

// Vertices are 0-based internally; the file format is 1-based.
using VertexSet = std::vector<int>;  // sorted, duplicate-free

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& what_)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
};

struct PreconditionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Simple undirected graph: no loops, no parallel edges.
/// Adjacency is kept both as sorted lists and bitset rows.
class Graph {
  public:
    Graph() = default;
    explicit Graph(int n);

    int n() const { return n_; }
    int edge_count() const { return m_; }
    int degree(int v) const { return (int)adj_[v].size(); }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }

    void add_edge(int u, int v);
    /// One-pass bulk construction (orders of magnitude faster for dense graphs).
    static Graph from_edges(int n, std::vector<std::pair<int, int>> edges);
    bool has_edge(int u, int v) const {
        return (bits_[(size_t)u * words_ + (size_t)(v >> 6)] >> (v & 63)) & 1u;
    }

    std::vector<std::pair<int, int>> edges() const;

    // Bitset row access; each row has `words()` 64-bit words.
    int words() const { return words_; }
    const uint64_t* row(int v) const { return bits_.data() + (size_t)v * words_; }

    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

  private:
    int n_ = 0;
    int m_ = 0;
    int words_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<uint64_t> bits_;
};

// ---- vertex set helpers ----

VertexSet vset_sorted(std::vector<int> v);
bool vset_contains(const VertexSet& s, int v);
VertexSet vset_union(const VertexSet& a, const VertexSet& b);
VertexSet vset_minus(const VertexSet& a, const VertexSet& b);
VertexSet vset_intersect(const VertexSet& a, const VertexSet& b);
bool vsets_disjoint(const VertexSet& a, const VertexSet& b);

// ---- construction / restriction ----

struct SubgraphResult {
    Graph graph;
    std::vector<int> to_orig;  // new id -> old id (ascending)
};

/// Induced subgraph on `s` (ids remapped to 0..|s|-1 in ascending order of old id).
SubgraphResult induced_subgraph(const Graph& g, const VertexSet& s);

/// Induced subgraph on V(g) minus `x`.
SubgraphResult remove_vertices(const Graph& g, const VertexSet& x);

/// Same vertex set, given edges removed.
Graph remove_edges(const Graph& g, const std::vector<std::pair<int, int>>& es);

Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);

// ---- elementary queries ----

VertexSet r_neighborhood(const Graph& g, const VertexSet& s, int r);
std::vector<VertexSet> components(const Graph& g);
bool is_connected(const Graph& g);

/// BFS distances from `src` (-1 when unreachable), restricted to `alive` when given.
std::vector<int> bfs_dist(const Graph& g, int src);

/// Shortest path between u and v inside the induced subgraph on `allowed`
/// (both endpoints must be allowed). Empty when none exists.
std::vector<int> shortest_path_within(const Graph& g, int u, int v, const VertexSet& allowed);

// ---- path / cycle validity ----

bool is_path_of(const Graph& g, const std::vector<int>& p);
bool is_induced_path_of(const Graph& g, const std::vector<int>& p);
bool is_cycle_of(const Graph& g, const std::vector<int>& c);
bool is_induced_cycle_of(const Graph& g, const std::vector<int>& c);

// ---- file format ----

/// Parses the line-oriented graph format ("p ind <n> <m>" header, "e <u> <v>" edges).
/// `kind` selects the expected header tag ("ind" for graphs, "pat" for patterns).
Graph parse_graph(std::istream& in, const std::string& kind = "ind");
Graph parse_graph_string(const std::string& text, const std::string& kind = "ind");
std::string serialize_graph(const Graph& g, const std::string& kind = "ind");

}  // namespace pancover
