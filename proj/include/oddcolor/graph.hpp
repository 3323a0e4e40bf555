#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace oddcolor {

using Vertex = int;

/// Undirected edge stored with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    Edge() = default;
    Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

    bool incident(Vertex w) const { return u == w || v == w; }
    Vertex other(Vertex w) const { return w == u ? v : u; }

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Finite simple undirected graph on vertex ids 0..vertex_count()-1.
///
/// Edges are kept sorted, so an edge index is stable for a given graph value.
/// Subgraph operations keep vertex ids (removed vertices become isolated),
/// which lets colorings of a subgraph be matched to the host by endpoints.
class SimpleGraph {
public:
    SimpleGraph() = default;
    explicit SimpleGraph(int vertex_count);

    int vertex_count() const { return static_cast<int>(adjacency_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    std::span<const Edge> edges() const { return edges_; }
    const Edge& edge(int index) const { return edges_[static_cast<std::size_t>(index)]; }

    /// Sorted neighbor list.
    std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[static_cast<std::size_t>(v)]; }
    int degree(Vertex v) const { return static_cast<int>(adjacency_[static_cast<std::size_t>(v)].size()); }
    int max_degree() const;

    bool has_edge(Vertex a, Vertex b) const;
    std::optional<int> edge_index(Vertex a, Vertex b) const;

    /// Same vertex ids; every edge touching `removed` is dropped.
    SimpleGraph without_vertices(std::span<const Vertex> removed) const;
    /// Same vertex ids; keeps only the listed edges (which must exist).
    SimpleGraph with_edges(std::span<const Edge> kept) const;
    /// Vertices of positive degree, ascending.
    std::vector<Vertex> active_vertices() const;

    friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

private:
    friend SimpleGraph build_graph(int, std::span<const std::pair<int, int>>);

    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adjacency_;
};

/// Builds a graph on max(vertex_count, 1 + largest id) vertices.
/// Throws std::invalid_argument on negative ids, loops, or duplicate edges.
SimpleGraph build_graph(int vertex_count, std::span<const std::pair<int, int>> edge_list);
SimpleGraph build_graph(std::span<const std::pair<int, int>> edge_list);
SimpleGraph build_graph(std::initializer_list<std::pair<int, int>> edge_list);

namespace generators {

SimpleGraph cycle(int length);
/// K_{1,leaves}; vertex 0 is the center.
SimpleGraph star(int leaves);
/// Path on `vertices` vertices.
SimpleGraph path(int vertices);
SimpleGraph petersen();
/// C_{κ,Δ}: spine 0..κ-1 in cyclic order, then Δ-2 pendants per spine vertex.
SimpleGraph caterpillar_cycle(int spine_length, int max_degree);
/// Spine 0..ℓ+1 with Δ-2 pendants on each internal vertex 1..ℓ.
SimpleGraph caterpillar_path(int internal_length, int max_degree);

}  // namespace generators

/// Shortest cycle lengths; std::nullopt stands for infinity (no such cycle).
struct GirthProfile {
    std::optional<int> girth;
    std::optional<int> odd_girth;
    std::optional<int> even_girth;
};

GirthProfile girth_profile(const SimpleGraph& g);
std::string format_length(std::optional<int> length);

/// Exact rational average degree 2|E(H)|/|V(H)| of the witness-induced subgraph.
struct Density {
    std::int64_t numerator = 0;
    std::int64_t denominator = 1;
    std::vector<Vertex> witness;

    /// Reduced "p/q", or "p" when q divides p.
    std::string to_string() const;
    /// numerator/denominator < p/q, exactly.
    bool less_than(std::int64_t p, std::int64_t q) const;
    int compare(const Density& other) const;
};

/// Maximum average degree over non-empty induced subgraphs.
/// Throws std::invalid_argument for the graph with no vertices.
Density mad(const SimpleGraph& g);

struct PeelResult {
    SimpleGraph h;                               // compacted: h vertex i is g vertex h_to_g[i]
    std::vector<Vertex> h_to_g;
    std::map<Vertex, std::vector<Vertex>> pendants;  // g vertex -> its removed degree-1 neighbors
};

/// Removes every degree-1 vertex of g once (no iteration to a fixpoint).
PeelResult peel_pendants(const SimpleGraph& g);

/// Path v_0..v_{ℓ+1} whose ℓ internal vertices have degree 2 in the host.
struct Thread {
    std::vector<Vertex> path;
    int internal_length() const { return static_cast<int>(path.size()) - 2; }
    bool closed() const { return path.front() == path.back(); }
};

/// Lexicographically least ℓ-thread, if any. Endpoints may coincide.
std::optional<Thread> find_thread(const SimpleGraph& g, int internal_length);
bool is_thread(const SimpleGraph& g, const Thread& t);

/// Thread lifted to G: pendants[i-1] lists the degree-1 neighbors of spine[i].
struct CaterpillarSpine {
    std::vector<Vertex> spine;
    std::vector<std::vector<Vertex>> pendants;

    int internal_length() const { return static_cast<int>(spine.size()) - 2; }
};

/// Attaches to each internal thread vertex its remaining neighbors in g.
/// Throws std::invalid_argument if one of them is not a degree-1 vertex of g.
CaterpillarSpine lift_thread(const SimpleGraph& g, const Thread& t);

/// Vertex i of the result is edge i of g; two vertices are adjacent iff the
/// edges share an endpoint or some edge of g touches both.
SimpleGraph conflict_graph(const SimpleGraph& g);

/// Connected components of the non-isolated part, each as a sorted vertex list.
std::vector<std::vector<Vertex>> components(const SimpleGraph& g);

}  // namespace oddcolor
