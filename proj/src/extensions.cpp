#include <algorithm>
#include <set>
#include <stdexcept>

#include "oddcolor/reduction.hpp"

namespace oddcolor {

namespace {

std::string vtx(Vertex v) { return std::to_string(v); }

void check_vertex_id(const SimpleGraph& g, Vertex v) {
    if (v < 0 || v >= g.vertex_count()) throw std::invalid_argument("vertex " + vtx(v) + " out of range");
}

std::uint32_t complement_of(const std::set<int>& colors, int ground) {
    std::uint32_t mask = (std::uint32_t{1} << ground) - 1;
    for (int c : colors) mask &= ~(std::uint32_t{1} << (c - 1));
    return mask;
}

// Colors on the edges of r at v, completed by the smallest unused colors to a
// κ-set.
std::set<int> completed_palette(const SimpleGraph& r, const StrongColoring& c, Vertex v, int kappa) {
    std::set<int> used;
    for (Vertex w : r.neighbors(v)) used.insert(c.colors[static_cast<std::size_t>(*r.edge_index(v, w))]);
    if (static_cast<int>(used.size()) > kappa) throw std::invalid_argument("vertex " + vtx(v) + " sees more than κ colors");
    for (int col = 1; static_cast<int>(used.size()) < kappa; ++col) used.insert(col);
    return used;
}

}  // namespace

StrongColoring extend_pendant(const SimpleGraph& g, const StrongColoring& c, Vertex x, Vertex z, int palette) {
    check_vertex_id(g, x);
    check_vertex_id(g, z);
    const auto xz = g.edge_index(x, z);
    if (!xz) throw std::invalid_argument("no edge " + vtx(x) + "-" + vtx(z));
    if (g.degree(z) != 1) throw std::invalid_argument("vertex " + vtx(z) + " is not a pendant (degree " + std::to_string(g.degree(z)) + ")");
    if (static_cast<int>(c.colors.size()) != g.edge_count())
        throw std::invalid_argument("coloring size does not match the edge count");
    int inner = 0;
    for (Vertex w : g.neighbors(x))
        if (w != z && g.degree(w) > 1) ++inner;
    if (inner > 1) throw std::invalid_argument("vertex " + vtx(x) + " has more than one non-pendant neighbor");
    if (palette < 2 * g.max_degree() - 1)
        throw std::invalid_argument("palette " + std::to_string(palette) + " below 2Δ-1 = " + std::to_string(2 * g.max_degree() - 1));
    if (c.colors[static_cast<std::size_t>(*xz)] != 0) throw std::invalid_argument("edge " + vtx(x) + "-" + vtx(z) + " already colored");

    std::vector<char> blocked(static_cast<std::size_t>(palette) + 1, 0);
    auto block = [&](Vertex a, Vertex b) {
        const int col = c.colors[static_cast<std::size_t>(*g.edge_index(a, b))];
        if (col > 0 && col <= palette) blocked[static_cast<std::size_t>(col)] = 1;
    };
    for (Vertex w : g.neighbors(x)) {
        if (w == z) continue;
        block(x, w);
        for (Vertex t : g.neighbors(w))
            if (t != x) block(w, t);
    }
    StrongColoring out = c;
    out.palette = palette;
    for (int col = 1; col <= palette; ++col)
        if (!blocked[static_cast<std::size_t>(col)]) {
            out.colors[static_cast<std::size_t>(*xz)] = col;
            return out;
        }
    throw std::logic_error("no free color for pendant edge " + vtx(x) + "-" + vtx(z));
}

SimpleGraph reduced_graph(const SimpleGraph& g, const CaterpillarSpine& spine) {
    const int l = spine.internal_length();
    if (l < 2 || static_cast<int>(spine.pendants.size()) != l) throw std::invalid_argument("malformed caterpillar spine");
    std::vector<Vertex> removed(spine.spine.begin() + 2, spine.spine.end() - 2);
    removed.insert(removed.end(), spine.pendants.front().begin(), spine.pendants.front().end());
    removed.insert(removed.end(), spine.pendants.back().begin(), spine.pendants.back().end());
    return g.without_vertices(removed);
}

int reducible_length(int kappa) {
    if (kappa < 3) throw std::invalid_argument("κ must be at least 3");
    return kappa == 3 ? 8 : 2 * kappa - 1;
}

StrongColoring extend_over_caterpillar(const SimpleGraph& g, const CaterpillarSpine& spine, const StrongColoring& c,
                                       int kappa) {
    const int l = spine.internal_length();
    const int need = reducible_length(kappa);
    if (kappa > kMaxOddParameter) throw std::invalid_argument("κ too large");
    if (l < need)
        throw std::invalid_argument("caterpillar of internal length " + std::to_string(l) + " is below " +
                                    std::to_string(need) + " and not reducible for κ = " + std::to_string(kappa));
    if (g.max_degree() > kappa) throw std::invalid_argument("maximum degree exceeds κ");
    for (Vertex v : spine.spine) check_vertex_id(g, v);
    const CaterpillarSpine lifted = lift_thread(g, Thread{spine.spine});
    for (std::size_t i = 0; i < lifted.pendants.size(); ++i) {
        std::vector<Vertex> a = lifted.pendants[i], b = spine.pendants.at(i);
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) throw std::invalid_argument("spine pendants do not match the graph");
    }
    for (std::size_t i = 0; i + 1 < spine.spine.size(); ++i)
        if (!g.has_edge(spine.spine[i], spine.spine[i + 1])) throw std::invalid_argument("spine is not a path of g");

    const SimpleGraph r = reduced_graph(g, spine);
    const int palette = 2 * kappa - 1;
    if (!verify_strong_coloring(r, c).ok) throw std::invalid_argument("coloring of the reduced graph is not strong");
    if (c.colors_used() > palette) throw std::invalid_argument("coloring of the reduced graph exceeds 2κ-1 colors");

    const auto& u = spine.spine;
    const int first = c.color_of(r, u[0], u[1]);
    const int last = c.color_of(r, u[static_cast<std::size_t>(l)], u[static_cast<std::size_t>(l) + 1]);
    const SubsetVertex w0{kappa, complement_of(completed_palette(r, c, u.front(), kappa), palette)};
    const SubsetVertex wl{kappa, complement_of(completed_palette(r, c, u.back(), kappa), palette)};
    const SpecialWalk walk = construct_prescribed_walk({w0, wl, first, last, l + 1, WalkMode::prescribed});

    StrongColoring out = transfer(r, c, g);
    out.palette = palette;
    auto set = [&](Vertex a, Vertex b, int col) { out.colors[static_cast<std::size_t>(*g.edge_index(a, b))] = col; };
    for (int i = 0; i <= l; ++i)
        set(u[static_cast<std::size_t>(i)], u[static_cast<std::size_t>(i) + 1], walk.labels[static_cast<std::size_t>(i)]);
    for (int i = 1; i <= l; ++i) {
        const std::uint32_t taken = (std::uint32_t{1} << (walk.labels[static_cast<std::size_t>(i) - 1] - 1)) |
                                    (std::uint32_t{1} << (walk.labels[static_cast<std::size_t>(i)] - 1));
        std::vector<int> free;
        for (int col : walk.vertices[static_cast<std::size_t>(i)].missing())
            if (!((taken >> (col - 1)) & 1U)) free.push_back(col);
        std::vector<Vertex> hanging = spine.pendants[static_cast<std::size_t>(i) - 1];
        std::sort(hanging.begin(), hanging.end());
        for (std::size_t j = 0; j < hanging.size(); ++j) set(u[static_cast<std::size_t>(i)], hanging[j], free.at(j));
    }
    if (!verify_strong_coloring(g, out).ok) throw std::logic_error("caterpillar extension produced a conflict");
    return out;
}

std::vector<std::pair<Edge, int>> color_cycle_with_pendants(const SimpleGraph& g, const std::vector<Vertex>& cycle,
                                                            const SpecialWalk& walk) {
    const std::size_t m = cycle.size();
    if (m < 3 || static_cast<std::size_t>(walk.length()) != m || walk.start() != walk.end())
        throw std::invalid_argument("walk must be closed with one edge per cycle edge");
    if (walk.labels.front() == walk.labels.back()) throw std::invalid_argument("walk backtracks at the wrap");
    std::vector<std::pair<Edge, int>> out;
    for (std::size_t i = 0; i < m; ++i) {
        const Vertex v = cycle[i], next = cycle[(i + 1) % m], prev = cycle[(i + m - 1) % m];
        if (!g.has_edge(v, next)) throw std::invalid_argument("cycle vertices are not consecutive in g");
        const int in = walk.labels[(i + m - 1) % m], leave = walk.labels[i];
        out.emplace_back(Edge(v, next), leave);
        std::vector<int> free;
        for (int col : walk.vertices[i].missing())
            if (col != in && col != leave) free.push_back(col);
        std::size_t used = 0;
        for (Vertex w : g.neighbors(v)) {
            if (w == next || w == prev) continue;
            if (g.degree(w) != 1) throw std::invalid_argument("vertex " + vtx(v) + " has a non-pendant neighbor off the cycle");
            if (used == free.size()) throw std::invalid_argument("vertex " + vtx(v) + " has too many pendants for O_" + std::to_string(walk.n));
            out.emplace_back(Edge(v, w), free[used++]);
        }
    }
    return out;
}

std::optional<SpecialWalk> cyclic_walk(int d, int length) {
    if (d < 3 || d > kMaxOddParameter || length < 1) return std::nullopt;
    std::vector<int> base(static_cast<std::size_t>(d) - 1);
    for (int i = 0; i < d - 1; ++i) base[static_cast<std::size_t>(i)] = i + 1;
    const SubsetVertex w = SubsetVertex::from_elements(d, base);
    if (d <= kOddGraphCap) return find_closed_special_walk(w, length);
    if (length < prescribed_threshold(d)) return std::nullopt;
    SpecialWalk walk = construct_prescribed_walk({w, w, d, d + 1, length, WalkMode::prescribed});
    walk.closed = true;
    return walk;
}

StrongColoring color_caterpillar_cycle(int kappa, int max_degree) {
    const bool even_ok = kappa % 2 == 0 && kappa >= 6 && max_degree >= 3;
    const bool odd_ok = kappa % 2 == 1 && kappa >= 2 * max_degree - 1 && max_degree >= 4;
    if (!even_ok && !odd_ok)
        throw std::invalid_argument("C_{" + std::to_string(kappa) + "," + std::to_string(max_degree) +
                                    "} needs κ even >= 6, or κ odd >= 2Δ-1 with Δ >= 4");
    const SimpleGraph g = generators::caterpillar_cycle(kappa, max_degree);
    const auto walk = cyclic_walk(max_degree, kappa);
    if (!walk) throw std::runtime_error("no closed special walk of length " + std::to_string(kappa));
    std::vector<Vertex> cycle(static_cast<std::size_t>(kappa));
    for (int i = 0; i < kappa; ++i) cycle[static_cast<std::size_t>(i)] = i;
    StrongColoring out = uncolored(g, 2 * max_degree - 1);
    for (const auto& [e, col] : color_cycle_with_pendants(g, cycle, *walk))
        out.colors[static_cast<std::size_t>(*g.edge_index(e.u, e.v))] = col;
    return out;
}

std::vector<int> cycle_colors(int length) {
    if (length < 3) throw std::invalid_argument("a cycle has at least 3 edges");
    if (length == 5) return {1, 2, 3, 4, 5};
    int fours = length % 3 == 0 ? 0 : (length % 3 == 1 ? 1 : 2);
    std::vector<int> out;
    for (int b = 0; b < fours; ++b)
        for (int col : {1, 2, 3, 4}) out.push_back(col);
    while (static_cast<int>(out.size()) < length)
        for (int col : {1, 2, 3}) out.push_back(col);
    return out;
}

}  // namespace oddcolor
