#include "oddcolor/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <string>

namespace oddcolor {

SimpleGraph::SimpleGraph(int vertex_count) {
    if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
    adjacency_.resize(static_cast<std::size_t>(vertex_count));
}

int SimpleGraph::max_degree() const {
    int best = 0;
    for (const auto& nbrs : adjacency_) best = std::max(best, static_cast<int>(nbrs.size()));
    return best;
}

bool SimpleGraph::has_edge(Vertex a, Vertex b) const { return edge_index(a, b).has_value(); }

std::optional<int> SimpleGraph::edge_index(Vertex a, Vertex b) const {
    if (a == b || a < 0 || b < 0 || a >= vertex_count() || b >= vertex_count()) return std::nullopt;
    const Edge key(a, b);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
    if (it == edges_.end() || *it != key) return std::nullopt;
    return static_cast<int>(it - edges_.begin());
}

SimpleGraph SimpleGraph::without_vertices(std::span<const Vertex> removed) const {
    std::vector<char> gone(adjacency_.size(), 0);
    for (Vertex v : removed) gone[static_cast<std::size_t>(v)] = 1;
    std::vector<Edge> kept;
    kept.reserve(edges_.size());
    for (const Edge& e : edges_)
        if (!gone[static_cast<std::size_t>(e.u)] && !gone[static_cast<std::size_t>(e.v)]) kept.push_back(e);
    return with_edges(kept);
}

SimpleGraph SimpleGraph::with_edges(std::span<const Edge> kept) const {
    SimpleGraph out(vertex_count());
    out.edges_.assign(kept.begin(), kept.end());
    std::sort(out.edges_.begin(), out.edges_.end());
    for (const Edge& e : out.edges_) {
        if (!has_edge(e.u, e.v)) throw std::invalid_argument("with_edges: edge not in host graph");
        out.adjacency_[static_cast<std::size_t>(e.u)].push_back(e.v);
        out.adjacency_[static_cast<std::size_t>(e.v)].push_back(e.u);
    }
    for (auto& nbrs : out.adjacency_) std::sort(nbrs.begin(), nbrs.end());
    return out;
}

std::vector<Vertex> SimpleGraph::active_vertices() const {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < vertex_count(); ++v)
        if (degree(v) > 0) out.push_back(v);
    return out;
}

SimpleGraph build_graph(int vertex_count, std::span<const std::pair<int, int>> edge_list) {
    int n = std::max(vertex_count, 0);
    for (auto [a, b] : edge_list) {
        if (a < 0 || b < 0) throw std::invalid_argument("negative vertex id");
        if (a == b) throw std::invalid_argument("loop at vertex " + std::to_string(a));
        n = std::max({n, a + 1, b + 1});
    }
    SimpleGraph g(n);
    g.edges_.reserve(edge_list.size());
    for (auto [a, b] : edge_list) g.edges_.emplace_back(a, b);
    std::sort(g.edges_.begin(), g.edges_.end());
    auto dup = std::adjacent_find(g.edges_.begin(), g.edges_.end());
    if (dup != g.edges_.end())
        throw std::invalid_argument("duplicate edge " + std::to_string(dup->u) + " " + std::to_string(dup->v));
    for (const Edge& e : g.edges_) {
        g.adjacency_[static_cast<std::size_t>(e.u)].push_back(e.v);
        g.adjacency_[static_cast<std::size_t>(e.v)].push_back(e.u);
    }
    for (auto& nbrs : g.adjacency_) std::sort(nbrs.begin(), nbrs.end());
    return g;
}

SimpleGraph build_graph(std::span<const std::pair<int, int>> edge_list) { return build_graph(0, edge_list); }

SimpleGraph build_graph(std::initializer_list<std::pair<int, int>> edge_list) {
    return build_graph(0, std::span<const std::pair<int, int>>(edge_list.begin(), edge_list.size()));
}

namespace generators {

namespace {
void require(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
}
}  // namespace

SimpleGraph cycle(int length) {
    require(length >= 3, "cycle length must be at least 3");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < length; ++i) edges.emplace_back(i, (i + 1) % length);
    return build_graph(length, edges);
}

SimpleGraph star(int leaves) {
    require(leaves >= 1, "star needs at least one leaf");
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
    return build_graph(leaves + 1, edges);
}

SimpleGraph path(int vertices) {
    require(vertices >= 1, "path needs at least one vertex");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < vertices; ++i) edges.emplace_back(i, i + 1);
    return build_graph(vertices, edges);
}

SimpleGraph petersen() {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);        // outer 5-cycle
        edges.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
        edges.emplace_back(i, 5 + i);              // spokes
    }
    return build_graph(10, edges);
}

SimpleGraph caterpillar_cycle(int spine_length, int max_degree) {
    require(spine_length >= 3, "caterpillar cycle needs κ >= 3");
    require(max_degree >= 2, "caterpillar cycle needs Δ >= 2");
    const int per = max_degree - 2;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < spine_length; ++i) {
        edges.emplace_back(i, (i + 1) % spine_length);
        for (int j = 0; j < per; ++j) edges.emplace_back(i, spine_length + i * per + j);
    }
    return build_graph(spine_length * (per + 1), edges);
}

SimpleGraph caterpillar_path(int internal_length, int max_degree) {
    require(internal_length >= 1, "caterpillar path needs ℓ >= 1");
    require(max_degree >= 2, "caterpillar path needs Δ >= 2");
    const int per = max_degree - 2;
    const int spine = internal_length + 2;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < spine; ++i) edges.emplace_back(i, i + 1);
    for (int i = 1; i <= internal_length; ++i)
        for (int j = 0; j < per; ++j) edges.emplace_back(i, spine + (i - 1) * per + j);
    return build_graph(spine + internal_length * per, edges);
}

}  // namespace generators

PeelResult peel_pendants(const SimpleGraph& g) {
    PeelResult out;
    std::vector<int> to_h(static_cast<std::size_t>(g.vertex_count()), -1);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) == 1) {
            out.pendants[g.neighbors(v)[0]].push_back(v);
        } else {
            to_h[static_cast<std::size_t>(v)] = static_cast<int>(out.h_to_g.size());
            out.h_to_g.push_back(v);
        }
    }
    std::vector<std::pair<int, int>> edges;
    for (const Edge& e : g.edges()) {
        int a = to_h[static_cast<std::size_t>(e.u)], b = to_h[static_cast<std::size_t>(e.v)];
        if (a >= 0 && b >= 0) edges.emplace_back(a, b);
    }
    out.h = build_graph(static_cast<int>(out.h_to_g.size()), edges);
    return out;
}

std::optional<Thread> find_thread(const SimpleGraph& g, int internal_length) {
    if (internal_length < 1) throw std::invalid_argument("thread length must be positive");
    const int n = g.vertex_count();
    std::vector<int> seen(static_cast<std::size_t>(n), -1);
    int stamp = 0;
    for (Vertex start = 0; start < n; ++start) {
        for (Vertex first : g.neighbors(start)) {
            if (g.degree(first) != 2) continue;
            ++stamp;
            seen[static_cast<std::size_t>(start)] = stamp;
            Thread t;
            t.path = {start, first};
            bool ok = true;
            Vertex prev = start, cur = first;
            for (int i = 1; i <= internal_length; ++i) {
                if (g.degree(cur) != 2 || seen[static_cast<std::size_t>(cur)] == stamp) {
                    ok = false;
                    break;
                }
                seen[static_cast<std::size_t>(cur)] = stamp;
                auto nb = g.neighbors(cur);
                Vertex next = nb[0] == prev ? nb[1] : nb[0];
                prev = cur;
                cur = next;
                t.path.push_back(cur);
            }
            if (!ok) continue;
            // the far endpoint may only coincide with the near one
            if (seen[static_cast<std::size_t>(cur)] == stamp && cur != start) continue;
            return t;
        }
    }
    return std::nullopt;
}

bool is_thread(const SimpleGraph& g, const Thread& t) {
    if (t.path.size() < 3) return false;
    for (std::size_t i = 0; i + 1 < t.path.size(); ++i)
        if (!g.has_edge(t.path[i], t.path[i + 1])) return false;
    std::vector<Vertex> inner(t.path.begin() + 1, t.path.end() - 1);
    for (Vertex v : inner)
        if (g.degree(v) != 2 || v == t.path.front() || v == t.path.back()) return false;
    std::sort(inner.begin(), inner.end());
    return std::adjacent_find(inner.begin(), inner.end()) == inner.end();
}

CaterpillarSpine lift_thread(const SimpleGraph& g, const Thread& t) {
    CaterpillarSpine out;
    out.spine = t.path;
    for (std::size_t i = 1; i + 1 < t.path.size(); ++i) {
        std::vector<Vertex> hanging;
        for (Vertex w : g.neighbors(t.path[i])) {
            if (w == t.path[i - 1] || w == t.path[i + 1]) continue;
            if (g.degree(w) != 1)
                throw std::invalid_argument("spine vertex " + std::to_string(t.path[i]) +
                                            " has a non-pendant neighbor off the spine");
            hanging.push_back(w);
        }
        out.pendants.push_back(std::move(hanging));
    }
    return out;
}

SimpleGraph conflict_graph(const SimpleGraph& g) {
    const int m = g.edge_count();
    std::vector<std::pair<int, int>> out;
    std::vector<int> mark(static_cast<std::size_t>(g.vertex_count()), -1);
    for (int i = 0; i < m; ++i) {
        const Edge& e = g.edge(i);
        // closed neighborhood of e's endpoints; any edge touching it conflicts with e
        for (Vertex end : {e.u, e.v}) {
            mark[static_cast<std::size_t>(end)] = i;
            for (Vertex w : g.neighbors(end)) mark[static_cast<std::size_t>(w)] = i;
        }
        for (int j = i + 1; j < m; ++j) {
            const Edge& f = g.edge(j);
            if (mark[static_cast<std::size_t>(f.u)] == i || mark[static_cast<std::size_t>(f.v)] == i)
                out.emplace_back(i, j);
        }
    }
    return build_graph(m, out);
}

std::vector<std::vector<Vertex>> components(const SimpleGraph& g) {
    std::vector<std::vector<Vertex>> out;
    std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
    for (Vertex s = 0; s < g.vertex_count(); ++s) {
        if (seen[static_cast<std::size_t>(s)] || g.degree(s) == 0) continue;
        std::vector<Vertex> comp;
        std::queue<Vertex> q;
        q.push(s);
        seen[static_cast<std::size_t>(s)] = 1;
        while (!q.empty()) {
            Vertex v = q.front();
            q.pop();
            comp.push_back(v);
            for (Vertex w : g.neighbors(v))
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    q.push(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

}  // namespace oddcolor
