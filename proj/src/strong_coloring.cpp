#include "oddcolor/strong_coloring.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "oddcolor/graph_io.hpp"

namespace oddcolor {

bool StrongColoring::total() const {
    return std::none_of(colors.begin(), colors.end(), [](int c) { return c == 0; });
}

int StrongColoring::colors_used() const {
    return colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end());
}

int StrongColoring::color_of(const SimpleGraph& g, Vertex a, Vertex b) const {
    auto idx = g.edge_index(a, b);
    if (!idx) throw std::invalid_argument("no edge " + std::to_string(a) + " " + std::to_string(b));
    return colors[static_cast<std::size_t>(*idx)];
}

StrongColoring uncolored(const SimpleGraph& g, int palette) {
    return StrongColoring{palette, std::vector<int>(static_cast<std::size_t>(g.edge_count()), 0)};
}

StrongColoring transfer(const SimpleGraph& from, const StrongColoring& c, const SimpleGraph& to) {
    StrongColoring out = uncolored(to, c.palette);
    for (int i = 0; i < to.edge_count(); ++i) {
        const Edge& e = to.edge(i);
        if (auto j = from.edge_index(e.u, e.v)) out.colors[static_cast<std::size_t>(i)] = c.colors[static_cast<std::size_t>(*j)];
    }
    return out;
}

namespace {

VerifyResult check(const SimpleGraph& g, const StrongColoring& c, bool allow_partial) {
    if (static_cast<int>(c.colors.size()) != g.edge_count())
        throw std::invalid_argument("coloring size does not match the edge count");
    for (int col : c.colors) {
        if (col == 0 && !allow_partial) throw std::invalid_argument("partial coloring: an edge is uncolored");
        if (col < 0 || col > c.palette) throw std::invalid_argument("color outside 1..palette");
    }
    // Two edges conflict iff both touch the two ends of a single edge.
    std::set<std::pair<int, int>> bad;
    std::vector<int> touching;
    for (const Edge& e : g.edges()) {
        touching.clear();
        for (Vertex end : {e.u, e.v})
            for (Vertex w : g.neighbors(end)) touching.push_back(*g.edge_index(end, w));
        std::sort(touching.begin(), touching.end());
        touching.erase(std::unique(touching.begin(), touching.end()), touching.end());
        for (std::size_t i = 0; i < touching.size(); ++i)
            for (std::size_t j = i + 1; j < touching.size(); ++j) {
                int a = c.colors[static_cast<std::size_t>(touching[i])];
                if (a != 0 && a == c.colors[static_cast<std::size_t>(touching[j])]) bad.emplace(touching[i], touching[j]);
            }
    }
    return VerifyResult{bad.empty(), {bad.begin(), bad.end()}};
}

}  // namespace

VerifyResult verify_strong_coloring(const SimpleGraph& g, const StrongColoring& c) { return check(g, c, false); }

VerifyResult verify_partial_coloring(const SimpleGraph& g, const StrongColoring& c) { return check(g, c, true); }

StrongColoring greedy_strong_coloring(const SimpleGraph& g) {
    const SimpleGraph conflicts = conflict_graph(g);
    StrongColoring c = uncolored(g, 0);
    std::vector<char> used;
    for (int i = 0; i < g.edge_count(); ++i) {
        used.assign(static_cast<std::size_t>(conflicts.degree(i)) + 2, 0);
        for (Vertex j : conflicts.neighbors(i)) {
            int col = c.colors[static_cast<std::size_t>(j)];
            if (col > 0 && col < static_cast<int>(used.size())) used[static_cast<std::size_t>(col)] = 1;
        }
        int col = 1;
        while (used[static_cast<std::size_t>(col)]) ++col;
        c.colors[static_cast<std::size_t>(i)] = col;
    }
    c.palette = c.colors_used();
    return c;
}

void write_coloring(std::ostream& out, const SimpleGraph& g, const StrongColoring& c) {
    out << "coloring K=" << c.palette << '\n';
    for (int i = 0; i < g.edge_count(); ++i)
        out << "c " << g.edge(i).u << ' ' << g.edge(i).v << ' ' << c.colors[static_cast<std::size_t>(i)] << '\n';
}

StrongColoring read_coloring(std::istream& in, const SimpleGraph& g) {
    std::string raw;
    int line_no = 0;
    std::optional<StrongColoring> c;
    auto fail = [&](const std::string& what) {
        throw std::invalid_argument("coloring line " + std::to_string(line_no) + ": " + what);
    };
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = strip_comment(raw);
        if (line.empty() || line.rfind("step ", 0) == 0 || line.rfind("trace ", 0) == 0) continue;
        std::istringstream ss(line);
        std::string tag;
        ss >> tag;
        if (!c) {
            if (tag != "coloring") fail("expected 'coloring K=<K>'");
            std::string k;
            ss >> k;
            if (k.rfind("K=", 0) != 0) fail("expected K=<K>");
            int palette = 0;
            try {
                palette = std::stoi(k.substr(2));
            } catch (const std::exception&) {
                fail("bad palette size");
            }
            if (palette < 0) fail("negative palette size");
            c = uncolored(g, palette);
            continue;
        }
        if (tag != "c") fail("unknown record '" + tag + "'");
        int u = 0, v = 0, col = 0;
        if (!(ss >> u >> v >> col)) fail("expected 'c <u> <v> <color>'");
        auto idx = g.edge_index(u, v);
        if (!idx) fail("no such edge in the graph");
        if (col < 1) fail("colors start at 1");
        if (c->colors[static_cast<std::size_t>(*idx)] != 0) fail("edge colored twice");
        c->colors[static_cast<std::size_t>(*idx)] = col;
    }
    if (!c) throw std::invalid_argument("coloring: missing header");
    if (!c->total()) throw std::invalid_argument("coloring: some edges are uncolored");
    return *c;
}

StrongColoring read_coloring_file(const std::string& path, const SimpleGraph& g) {
    if (path == "-") return read_coloring(std::cin, g);
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    return read_coloring(in, g);
}

}  // namespace oddcolor
