#include "oddcolor/graph.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace oddcolor {

namespace {

// Dinic max flow on integer capacities.
class MaxFlow {
public:
    explicit MaxFlow(int nodes) : adj_(static_cast<std::size_t>(nodes)) {}

    void add_edge(int from, int to, std::int64_t cap) {
        adj_[static_cast<std::size_t>(from)].push_back(static_cast<int>(arcs_.size()));
        arcs_.push_back({to, cap});
        adj_[static_cast<std::size_t>(to)].push_back(static_cast<int>(arcs_.size()));
        arcs_.push_back({from, 0});
    }

    std::int64_t run(int source, int sink) {
        std::int64_t total = 0;
        while (levelize(source, sink)) {
            iter_.assign(adj_.size(), 0);
            while (std::int64_t pushed = augment(source, sink, std::numeric_limits<std::int64_t>::max()))
                total += pushed;
        }
        return total;
    }

    /// Nodes reachable from `source` in the residual network after run().
    std::vector<char> source_side(int source) const {
        std::vector<char> seen(adj_.size(), 0);
        std::queue<int> q;
        q.push(source);
        seen[static_cast<std::size_t>(source)] = 1;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int id : adj_[static_cast<std::size_t>(v)]) {
                const Arc& a = arcs_[static_cast<std::size_t>(id)];
                if (a.cap > 0 && !seen[static_cast<std::size_t>(a.to)]) {
                    seen[static_cast<std::size_t>(a.to)] = 1;
                    q.push(a.to);
                }
            }
        }
        return seen;
    }

private:
    struct Arc {
        int to;
        std::int64_t cap;
    };

    bool levelize(int source, int sink) {
        level_.assign(adj_.size(), -1);
        std::queue<int> q;
        level_[static_cast<std::size_t>(source)] = 0;
        q.push(source);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int id : adj_[static_cast<std::size_t>(v)]) {
                const Arc& a = arcs_[static_cast<std::size_t>(id)];
                if (a.cap > 0 && level_[static_cast<std::size_t>(a.to)] < 0) {
                    level_[static_cast<std::size_t>(a.to)] = level_[static_cast<std::size_t>(v)] + 1;
                    q.push(a.to);
                }
            }
        }
        return level_[static_cast<std::size_t>(sink)] >= 0;
    }

    std::int64_t augment(int v, int sink, std::int64_t limit) {
        if (v == sink) return limit;
        auto& it = iter_[static_cast<std::size_t>(v)];
        const auto& out = adj_[static_cast<std::size_t>(v)];
        for (; it < out.size(); ++it) {
            int id = out[it];
            Arc& a = arcs_[static_cast<std::size_t>(id)];
            if (a.cap <= 0 || level_[static_cast<std::size_t>(a.to)] != level_[static_cast<std::size_t>(v)] + 1) continue;
            std::int64_t got = augment(a.to, sink, std::min(limit, a.cap));
            if (got > 0) {
                a.cap -= got;
                arcs_[static_cast<std::size_t>(id ^ 1)].cap += got;
                return got;
            }
        }
        return 0;
    }

    std::vector<std::vector<int>> adj_;
    std::vector<Arc> arcs_;
    std::vector<int> level_;
    std::vector<std::size_t> iter_;
};

// Vertex set maximizing q·|E(S)| − p·|S| (the empty set scores 0).
std::vector<Vertex> best_closure(const SimpleGraph& g, std::int64_t p, std::int64_t q) {
    const int n = g.vertex_count(), m = g.edge_count();
    const int source = n + m, sink = n + m + 1;
    const std::int64_t inf = q * static_cast<std::int64_t>(m) + 1;
    MaxFlow flow(n + m + 2);
    for (int i = 0; i < m; ++i) {
        flow.add_edge(source, n + i, q);
        flow.add_edge(n + i, g.edge(i).u, inf);
        flow.add_edge(n + i, g.edge(i).v, inf);
    }
    for (Vertex v = 0; v < n; ++v) flow.add_edge(v, sink, p);
    flow.run(source, sink);
    auto side = flow.source_side(source);
    std::vector<Vertex> chosen;
    for (Vertex v = 0; v < n; ++v)
        if (side[static_cast<std::size_t>(v)]) chosen.push_back(v);
    return chosen;
}

std::int64_t induced_edges(const SimpleGraph& g, std::span<const Vertex> set) {
    std::vector<char> in(static_cast<std::size_t>(g.vertex_count()), 0);
    for (Vertex v : set) in[static_cast<std::size_t>(v)] = 1;
    std::int64_t count = 0;
    for (const Edge& e : g.edges())
        if (in[static_cast<std::size_t>(e.u)] && in[static_cast<std::size_t>(e.v)]) ++count;
    return count;
}

}  // namespace

std::string Density::to_string() const {
    std::int64_t d = std::gcd(numerator, denominator);
    if (d == 0) d = 1;
    std::int64_t p = numerator / d, q = denominator / d;
    return q == 1 ? std::to_string(p) : std::to_string(p) + "/" + std::to_string(q);
}

bool Density::less_than(std::int64_t p, std::int64_t q) const { return numerator * q < p * denominator; }

int Density::compare(const Density& other) const {
    std::int64_t lhs = numerator * other.denominator, rhs = other.numerator * denominator;
    return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
}

Density mad(const SimpleGraph& g) {
    const int n = g.vertex_count();
    if (n == 0) throw std::invalid_argument("mad of the empty graph");
    if (g.edge_count() == 0) return Density{0, 1, {0}};

    // Dinkelbach iteration on the edge density |E(S)|/|S|: each cut either
    // certifies the current ratio optimal or yields a strictly denser set.
    std::vector<Vertex> current(static_cast<std::size_t>(n));
    std::iota(current.begin(), current.end(), 0);
    std::int64_t edges = g.edge_count(), size = n;
    while (true) {
        auto candidate = best_closure(g, edges, size);
        if (candidate.empty()) break;
        std::int64_t e = induced_edges(g, candidate), s = static_cast<std::int64_t>(candidate.size());
        if (e * size <= edges * s) break;
        current = std::move(candidate);
        edges = e;
        size = s;
    }
    return Density{2 * edges, size, current};
}

}  // namespace oddcolor
