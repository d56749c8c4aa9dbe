#pragma once

#include "pancover/graph.hpp"

namespace pancover {

/// A pattern graph H whose induced subdivisions we pack and cover.
struct Pattern {
    Graph graph;
    std::string name;  // "pan1", "pan2", "diamond", or "custom"

    static Pattern pan(int p);  // triangle plus pendant path on p edges
    static Pattern pan1() { return pan(1); }
    static Pattern pan2() { return pan(2); }
    static Pattern diamond();  // K4 minus an edge

    static Pattern from_file_text(const std::string& text);
    static Pattern by_name(const std::string& name);  // preset names only
};

}  // namespace pancover
