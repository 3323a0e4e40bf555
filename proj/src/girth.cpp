#include "oddcolor/graph.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <stack>

namespace oddcolor {

namespace {

std::vector<int> bfs_distances(const SimpleGraph& g, Vertex root, std::span<const char> allowed) {
    std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()), -1);
    std::queue<Vertex> q;
    dist[static_cast<std::size_t>(root)] = 0;
    q.push(root);
    while (!q.empty()) {
        Vertex v = q.front();
        q.pop();
        for (Vertex w : g.neighbors(v)) {
            if (!allowed.empty() && !allowed[static_cast<std::size_t>(w)]) continue;
            if (dist[static_cast<std::size_t>(w)] < 0) {
                dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
                q.push(w);
            }
        }
    }
    return dist;
}

// Edge sets of the biconnected components (Hopcroft–Tarjan, iterative).
std::vector<std::vector<Edge>> blocks(const SimpleGraph& g) {
    const int n = g.vertex_count();
    std::vector<int> disc(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
    std::vector<std::vector<Edge>> out;
    std::vector<Edge> edge_stack;
    int timer = 0;
    struct Frame {
        Vertex v;
        Vertex parent;
        std::size_t next;
    };
    for (Vertex root = 0; root < n; ++root) {
        if (disc[static_cast<std::size_t>(root)] >= 0 || g.degree(root) == 0) continue;
        std::stack<Frame> st;
        disc[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = timer++;
        st.push({root, -1, 0});
        while (!st.empty()) {
            Frame& f = st.top();
            auto nbrs = g.neighbors(f.v);
            if (f.next < nbrs.size()) {
                Vertex w = nbrs[f.next++];
                if (w == f.parent) continue;
                if (disc[static_cast<std::size_t>(w)] < 0) {
                    edge_stack.emplace_back(f.v, w);
                    disc[static_cast<std::size_t>(w)] = low[static_cast<std::size_t>(w)] = timer++;
                    st.push({w, f.v, 0});
                } else if (disc[static_cast<std::size_t>(w)] < disc[static_cast<std::size_t>(f.v)]) {
                    edge_stack.emplace_back(f.v, w);
                    low[static_cast<std::size_t>(f.v)] =
                        std::min(low[static_cast<std::size_t>(f.v)], disc[static_cast<std::size_t>(w)]);
                }
                continue;
            }
            Frame done = f;
            st.pop();
            if (done.parent < 0) continue;
            Vertex p = done.parent;
            low[static_cast<std::size_t>(p)] =
                std::min(low[static_cast<std::size_t>(p)], low[static_cast<std::size_t>(done.v)]);
            if (low[static_cast<std::size_t>(done.v)] >= disc[static_cast<std::size_t>(p)]) {
                std::vector<Edge> block;
                const Edge cut(p, done.v);
                while (true) {
                    Edge e = edge_stack.back();
                    edge_stack.pop_back();
                    block.push_back(e);
                    if (e == cut) break;
                }
                out.push_back(std::move(block));
            }
        }
    }
    return out;
}

// Is there a simple cycle of exactly `length` edges in `block` (a 2-connected graph)?
// Each cycle is searched from its least vertex; BFS distance back to the root prunes.
bool has_cycle_of_length(const SimpleGraph& block, int length) {
    const int n = block.vertex_count();
    std::vector<char> allowed(static_cast<std::size_t>(n), 0), on_path(static_cast<std::size_t>(n), 0);
    for (Vertex v : block.active_vertices()) allowed[static_cast<std::size_t>(v)] = 1;
    for (Vertex root : block.active_vertices()) {
        auto dist = bfs_distances(block, root, allowed);
        std::function<bool(Vertex, int)> extend = [&](Vertex v, int depth) -> bool {
            for (Vertex w : block.neighbors(v)) {
                if (w == root && depth == length - 1) return true;
                if (!allowed[static_cast<std::size_t>(w)] || on_path[static_cast<std::size_t>(w)] || w == root) continue;
                int d = dist[static_cast<std::size_t>(w)];
                if (d < 0 || depth + 1 + d > length) continue;
                on_path[static_cast<std::size_t>(w)] = 1;
                bool found = extend(w, depth + 1);
                on_path[static_cast<std::size_t>(w)] = 0;
                if (found) return true;
            }
            return false;
        };
        on_path[static_cast<std::size_t>(root)] = 1;
        bool found = extend(root, 0);
        on_path[static_cast<std::size_t>(root)] = 0;
        if (found) return true;
        allowed[static_cast<std::size_t>(root)] = 0;
    }
    return false;
}

}  // namespace

GirthProfile girth_profile(const SimpleGraph& g) {
    GirthProfile out;
    auto improve = [](std::optional<int>& slot, int value) {
        if (!slot || value < *slot) slot = value;
    };
    const int n = g.vertex_count();
    for (Vertex root = 0; root < n; ++root) {
        if (g.degree(root) < 2) continue;
        std::vector<int> dist(static_cast<std::size_t>(n), -1), parent(static_cast<std::size_t>(n), -1);
        std::queue<Vertex> q;
        dist[static_cast<std::size_t>(root)] = 0;
        q.push(root);
        while (!q.empty()) {
            Vertex v = q.front();
            q.pop();
            for (Vertex w : g.neighbors(v)) {
                if (dist[static_cast<std::size_t>(w)] < 0) {
                    dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
                    parent[static_cast<std::size_t>(w)] = v;
                    q.push(w);
                } else if (parent[static_cast<std::size_t>(v)] != w && v < w) {
                    int dv = dist[static_cast<std::size_t>(v)], dw = dist[static_cast<std::size_t>(w)];
                    improve(out.girth, dv + dw + 1);
                    if (dv == dw) improve(out.odd_girth, 2 * dv + 1);
                }
            }
        }
    }
    if (!out.girth) return out;
    if (*out.girth % 2 == 0) {
        out.even_girth = out.girth;
        return out;
    }
    // Shortest odd closed walks are cycles, shortest even ones need not be.
    // Even cycles live inside blocks; a block that is a single cycle has one
    // cycle length, any other 2-connected block contains an even cycle.
    for (const auto& block_edges : blocks(g)) {
        if (block_edges.size() < 3) continue;
        SimpleGraph block = g.with_edges(block_edges);
        const int verts = static_cast<int>(block.active_vertices().size());
        const int m = static_cast<int>(block_edges.size());
        if (m == verts) {
            if (m % 2 == 0) improve(out.even_girth, m);
            continue;
        }
        int start = *out.girth + 1;
        for (int len = start; len <= verts && (!out.even_girth || len < *out.even_girth); len += 2) {
            if (has_cycle_of_length(block, len)) {
                improve(out.even_girth, len);
                break;
            }
        }
    }
    return out;
}

std::string format_length(std::optional<int> length) { return length ? std::to_string(*length) : "inf"; }

}  // namespace oddcolor
