#include "pancover/pattern.hpp"

namespace pancover {

Pattern Pattern::pan(int p) {
    if (p < 1) throw std::invalid_argument("pan order must be >= 1");
    // vertices 0..p-1: pendant path (0 = degree-1 end); p, p+1, p+2: triangle,
    // with the path attached at p.
    Graph g(p + 3);
    for (int i = 0; i + 1 < p; ++i) g.add_edge(i, i + 1);
    g.add_edge(p - 1, p);
    g.add_edge(p, p + 1);
    g.add_edge(p + 1, p + 2);
    g.add_edge(p, p + 2);
    return {std::move(g), p == 1 ? "pan1" : (p == 2 ? "pan2" : "pan" + std::to_string(p))};
}

Pattern Pattern::diamond() {
    // 0, 1: the two degree-3 vertices; 2, 3: the non-adjacent pair.
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    g.add_edge(1, 2);
    g.add_edge(0, 3);
    g.add_edge(1, 3);
    return {std::move(g), "diamond"};
}

Pattern Pattern::from_file_text(const std::string& text) {
    return {parse_graph_string(text, "pat"), "custom"};
}

Pattern Pattern::by_name(const std::string& name) {
    if (name == "pan1") return pan1();
    if (name == "pan2") return pan2();
    if (name == "diamond") return diamond();
    throw std::invalid_argument("unknown pattern preset: " + name);
}

}  // namespace pancover
