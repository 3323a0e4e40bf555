#include "oddcolor/graph_io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

namespace oddcolor {

std::string strip_comment(const std::string& line) {
    auto cut = line.find('#');
    std::string s = line.substr(0, cut);
    auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return {};
    auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

namespace {
[[noreturn]] void fail(int line_no, const std::string& what) {
    throw std::invalid_argument("graph line " + std::to_string(line_no) + ": " + what);
}
}  // namespace

SimpleGraph read_graph(std::istream& in) {
    std::string raw;
    int line_no = 0;
    int n = -1, m = -1;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = strip_comment(raw);
        if (line.empty()) continue;
        std::istringstream ss(line);
        std::string tag;
        ss >> tag;
        if (n < 0) {
            if (tag != "graph" || !(ss >> n >> m) || n < 0 || m < 0) fail(line_no, "expected 'graph <n> <m>'");
        } else if (tag == "e") {
            int u = 0, v = 0;
            if (!(ss >> u >> v)) fail(line_no, "expected 'e <u> <v>'");
            if (u < 0 || v < 0 || u >= n || v >= n) fail(line_no, "vertex id out of range");
            edges.emplace_back(u, v);
        } else {
            fail(line_no, "unknown record '" + tag + "'");
        }
        std::string extra;
        if (ss >> extra) fail(line_no, "trailing token '" + extra + "'");
    }
    if (n < 0) throw std::invalid_argument("graph: missing header");
    if (static_cast<int>(edges.size()) != m)
        throw std::invalid_argument("graph: header announces " + std::to_string(m) + " edges, found " +
                                    std::to_string(edges.size()));
    return build_graph(n, edges);
}

SimpleGraph read_graph_file(const std::string& path) {
    if (path == "-") return read_graph(std::cin);
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    return read_graph(in);
}

void write_graph(std::ostream& out, const SimpleGraph& g) {
    out << "graph " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const Edge& e : g.edges()) out << "e " << e.u << ' ' << e.v << '\n';
}

}  // namespace oddcolor
