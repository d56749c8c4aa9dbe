#include "pancover/certificate.hpp"

#include <sstream>

#include "pancover/diamond.hpp"
#include "pancover/findmodel.hpp"
#include "pancover/minpan.hpp"

namespace pancover {

Certificate Certificate::packing(std::string pattern, std::vector<VertexSet> groups,
                                 std::string echo) {
    Certificate c;
    c.kind = Kind::Packing;
    c.pattern = std::move(pattern);
    c.k = (int)groups.size();
    c.groups = std::move(groups);
    c.policy_echo = std::move(echo);
    return c;
}

Certificate Certificate::cover_of(std::string pattern, VertexSet x, std::string echo) {
    Certificate c;
    c.kind = Kind::Cover;
    c.pattern = std::move(pattern);
    c.cover = std::move(x);
    c.policy_echo = std::move(echo);
    return c;
}

std::string serialize_certificate(const Certificate& c) {
    std::ostringstream os;
    if (c.kind == Certificate::Kind::Packing) {
        os << "s PACKING " << c.pattern << " " << c.k << "\n";
        for (const auto& grp : c.groups) {
            os << "m";
            for (int v : grp) os << " " << v + 1;
            os << "\n";
        }
    } else {
        os << "s COVER " << c.pattern << " " << c.cover.size() << "\n";
        os << "x";
        for (int v : c.cover) os << " " << v + 1;
        os << "\n";
    }
    if (!c.policy_echo.empty()) os << "c policy " << c.policy_echo << "\n";
    return os.str();
}

Certificate parse_certificate(std::istream& in) {
    Certificate c;
    std::string line;
    int ln = 0;
    bool header = false;
    int declared = 0;
    while (std::getline(in, line)) {
        ++ln;
        if (line.empty()) continue;
        std::istringstream iss(line);
        std::string tag;
        iss >> tag;
        if (tag == "c") {
            std::string what;
            iss >> what;
            if (what == "policy") {
                std::string rest;
                std::getline(iss, rest);
                if (!rest.empty() && rest[0] == ' ') rest.erase(0, 1);
                c.policy_echo = rest;
            }
            continue;
        }
        if (!header) {
            std::string kind, pattern;
            if (tag != "s" || !(iss >> kind >> pattern >> declared))
                throw ParseError(ln, "malformed certificate header");
            if (kind == "PACKING")
                c.kind = Certificate::Kind::Packing;
            else if (kind == "COVER")
                c.kind = Certificate::Kind::Cover;
            else
                throw ParseError(ln, "unknown certificate kind " + kind);
            c.pattern = pattern;
            c.k = c.kind == Certificate::Kind::Packing ? declared : 0;
            header = true;
        } else if (tag == "m") {
            if (c.kind != Certificate::Kind::Packing) throw ParseError(ln, "m line in a cover");
            std::vector<int> grp;
            int v;
            while (iss >> v) grp.push_back(v - 1);
            c.groups.push_back(vset_sorted(std::move(grp)));
        } else if (tag == "x") {
            if (c.kind != Certificate::Kind::Cover) throw ParseError(ln, "x line in a packing");
            std::vector<int> xs;
            int v;
            while (iss >> v) xs.push_back(v - 1);
            c.cover = vset_sorted(std::move(xs));
        } else {
            throw ParseError(ln, "unknown certificate line \"" + tag + "\"");
        }
    }
    if (!header) throw ParseError(ln, "missing certificate header");
    if (c.kind == Certificate::Kind::Packing && (int)c.groups.size() != declared)
        throw ParseError(ln, "packing group count mismatch");
    if (c.kind == Certificate::Kind::Cover && (int)c.cover.size() != declared)
        throw ParseError(ln, "cover size mismatch");
    return c;
}

Certificate parse_certificate_string(const std::string& text) {
    std::istringstream iss(text);
    return parse_certificate(iss);
}

namespace {

VerifyResult check_group(const Graph& g, const Pattern& pat, const VertexSet& grp,
                         long long budget) {
    for (int v : grp)
        if (v < 0 || v >= g.n()) return {false, "group vertex out of range"};
    auto sub = induced_subgraph(g, grp);
    if (pat.name == "pan1" || pat.name == "pan2") {
        int p = pat.name == "pan1" ? 1 : 2;
        if (!is_pan_subdivision_graph(sub.graph, p))
            return {false, "group is not an induced " + pat.name + " subdivision"};
    } else if (pat.name == "diamond") {
        if (!is_diamond_subdivision_graph(sub.graph))
            return {false, "group is not an induced diamond subdivision"};
    } else {
        if (!find_spanning_model(sub.graph, pat, budget))
            return {false, "group is not an induced subdivision of the pattern"};
    }
    return {true, ""};
}

VerifyResult check_residual_free(const Graph& g, const Pattern& pat, const VertexSet& x,
                                 long long budget) {
    auto sub = remove_vertices(g, x);
    if (pat.name == "pan1" || pat.name == "pan2") {
        if (find_min_pan(sub.graph, pat.name == "pan1" ? 1 : 2))
            return {false, "cover leaves an induced " + pat.name + " subdivision"};
    } else if (pat.name == "diamond") {
        if (detect_diamond(sub.graph))
            return {false, "cover leaves an induced diamond subdivision"};
    } else {
        if (find_model(sub.graph, pat, budget))
            return {false, "cover leaves an induced subdivision of the pattern"};
    }
    return {true, ""};
}

}  // namespace

VerifyResult verify_certificate(const Graph& g, const Pattern& pat, const Certificate& c,
                                long long budget) {
    if (c.kind == Certificate::Kind::Packing) {
        if ((int)c.groups.size() != c.k) return {false, "group count mismatch"};
        for (size_t i = 0; i < c.groups.size(); ++i)
            for (size_t j = i + 1; j < c.groups.size(); ++j)
                if (!vsets_disjoint(c.groups[i], c.groups[j]))
                    return {false, "packing groups overlap"};
        for (const auto& grp : c.groups)
            if (auto r = check_group(g, pat, grp, budget); !r) return r;
        return {true, ""};
    }
    for (int v : c.cover)
        if (v < 0 || v >= g.n()) return {false, "cover vertex out of range"};
    return check_residual_free(g, pat, c.cover, budget);
}

}  // namespace pancover
