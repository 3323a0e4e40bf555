#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <array>
#include <queue>
#include <sstream>

#include "oddcolor/odd_graph.hpp"
#include "oddcolor/strong_coloring.hpp"

using namespace oddcolor;

namespace {

SubsetVertex sv(int n, std::initializer_list<int> e) { return SubsetVertex::from_elements(n, e); }

std::vector<int> bfs_from(const SimpleGraph& g, Vertex s) {
    std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()), -1);
    std::queue<Vertex> q;
    dist[static_cast<std::size_t>(s)] = 0;
    q.push(s);
    while (!q.empty()) {
        Vertex v = q.front();
        q.pop();
        for (Vertex w : g.neighbors(v))
            if (dist[static_cast<std::size_t>(w)] < 0) {
                dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
                q.push(w);
            }
    }
    return dist;
}

// Shortest even walk length by BFS on the bipartite double cover.
std::vector<int> even_distances(const SimpleGraph& g, Vertex s) {
    const int n = g.vertex_count();
    std::vector<int> dist(static_cast<std::size_t>(2 * n), -1);
    std::queue<int> q;
    dist[static_cast<std::size_t>(2 * s)] = 0;
    q.push(2 * s);
    while (!q.empty()) {
        int state = q.front();
        q.pop();
        for (Vertex w : g.neighbors(state / 2)) {
            int next = 2 * w + (1 - state % 2);
            if (dist[static_cast<std::size_t>(next)] < 0) {
                dist[static_cast<std::size_t>(next)] = dist[static_cast<std::size_t>(state)] + 1;
                q.push(next);
            }
        }
    }
    std::vector<int> out(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) out[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(2 * v)];
    return out;
}

}  // namespace

TEST_CASE("odd graph sizes") {
    OddGraph o3 = odd_graph(3);
    CHECK(o3.graph.vertex_count() == 10);
    CHECK(o3.graph.edge_count() == 15);
    for (Vertex v = 0; v < 10; ++v) CHECK(o3.graph.degree(v) == 3);
    CHECK(girth_profile(o3.graph).girth == 5);

    OddGraph o4 = odd_graph(4);
    CHECK(o4.graph.vertex_count() == 35);
    CHECK(o4.graph.edge_count() == 70);
    for (Vertex v = 0; v < 35; ++v) CHECK(o4.graph.degree(v) == 4);

    CHECK_THROWS_AS(odd_graph(2), std::invalid_argument);
    CHECK_THROWS_AS(odd_graph(8), std::invalid_argument);
    CHECK(odd_graph(5).graph.vertex_count() == 126);
}

TEST_CASE("subset vertices") {
    CHECK(sv(4, {3, 1, 2}).to_string() == "1,2,3");
    CHECK(sv(3, {1, 2}).missing() == std::vector<int>{3, 4, 5});
    CHECK(parse_subset(3, "2,5") == sv(3, {2, 5}));
    CHECK_THROWS_AS(parse_subset(3, "1,2,3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_subset(3, "1,x"), std::invalid_argument);
    CHECK_THROWS_AS(sv(3, {1, 6}), std::invalid_argument);
    CHECK_THROWS_AS(sv(3, {1, 1}), std::invalid_argument);
}

TEST_CASE("edge labels and neighbors") {
    CHECK(edge_label(sv(3, {1, 2}), sv(3, {3, 4})) == 5);
    CHECK(edge_label(sv(4, {1, 2, 3}), sv(4, {4, 5, 6})) == 7);
    CHECK_THROWS_AS(edge_label(sv(3, {1, 2}), sv(3, {2, 3})), std::invalid_argument);

    CHECK(neighbor_via_label(sv(3, {1, 2}), 3) == sv(3, {4, 5}));
    CHECK(neighbor_via_label(sv(4, {1, 2, 3}), 4) == sv(4, {5, 6, 7}));
    CHECK_THROWS_AS(neighbor_via_label(sv(3, {1, 2}), 1), std::invalid_argument);
}

TEST_CASE("labels at a vertex are its missing elements") {
    for (int n : {3, 4}) {
        OddGraph og = odd_graph(n);
        for (Vertex v = 0; v < og.graph.vertex_count(); ++v) {
            std::vector<int> labels;
            for (Vertex w : og.graph.neighbors(v))
                labels.push_back(edge_label(og.vertices[static_cast<std::size_t>(v)], og.vertices[static_cast<std::size_t>(w)]));
            std::sort(labels.begin(), labels.end());
            CHECK(labels == og.vertices[static_cast<std::size_t>(v)].missing());
        }
    }
}

TEST_CASE("edge labeling is a strong coloring") {
    for (int n : {3, 4, 5}) {
        OddGraph og = odd_graph(n);
        StrongColoring c = uncolored(og.graph, 2 * n - 1);
        for (int i = 0; i < og.graph.edge_count(); ++i) {
            const Edge& e = og.graph.edge(i);
            c.colors[static_cast<std::size_t>(i)] =
                edge_label(og.vertices[static_cast<std::size_t>(e.u)], og.vertices[static_cast<std::size_t>(e.v)]);
        }
        CHECK(verify_strong_coloring(og.graph, c).ok);
    }
}

TEST_CASE("replacing rule over every 2-path") {
    for (int n : {3, 4}) {
        OddGraph og = odd_graph(n);
        for (Vertex mid = 0; mid < og.graph.vertex_count(); ++mid)
            for (Vertex a : og.graph.neighbors(mid))
                for (Vertex b : og.graph.neighbors(mid)) {
                    if (a == b) continue;
                    const auto& w1 = og.vertices[static_cast<std::size_t>(a)];
                    const auto& w2 = og.vertices[static_cast<std::size_t>(mid)];
                    const auto& w3 = og.vertices[static_cast<std::size_t>(b)];
                    const int x = edge_label(w1, w2), y = edge_label(w2, w3);
                    const std::uint32_t expect = (w1.members & ~(1U << (y - 1))) | (1U << (x - 1));
                    CHECK(w3.members == expect);
                }
    }
}

TEST_CASE("walk_from_labels") {
    SpecialWalk w = walk_from_labels(sv(4, {1, 2, 3}), std::vector<int>{4, 1, 5, 2, 7, 3, 6, 7});
    CHECK(w.end() == sv(4, {4, 5, 6}));
    CHECK(w.length() == 8);
    CHECK_FALSE(walk_defect(w).has_value());

    SpecialWalk p = walk_from_labels(sv(3, {1, 2}), std::vector<int>{3, 1, 4, 2, 5, 3, 2, 4, 1});
    CHECK(p.end() == sv(3, {3, 4}));
    CHECK_FALSE(walk_defect(p).has_value());

    CHECK_THROWS_AS(walk_from_labels(sv(3, {1, 2}), std::vector<int>{3, 3}), std::invalid_argument);
    CHECK_THROWS_AS(walk_from_labels(sv(3, {1, 2}), std::vector<int>{1}), std::invalid_argument);

    SpecialWalk r = reversed(w);
    CHECK(r.start() == w.end());
    CHECK_FALSE(walk_defect(r).has_value());
}

TEST_CASE("walk_defect catches broken walks") {
    SpecialWalk w = walk_from_labels(sv(3, {1, 2}), std::vector<int>{3, 1});
    w.labels[1] = 2;
    CHECK(walk_defect(w).has_value());
    SpecialWalk c = walk_from_labels(sv(3, {1, 2}), std::vector<int>{3, 1});
    c.closed = true;
    CHECK(walk_defect(c).has_value());
}

TEST_CASE("classify_pair") {
    PairPartition a = classify_pair(sv(4, {1, 2, 3}), sv(4, {4, 5, 6}));
    CHECK(a.shared.empty());
    CHECK(a.start_only == std::vector<int>{1, 2, 3});
    CHECK(a.end_only == std::vector<int>{4, 5, 6});
    CHECK(a.spare == std::vector<int>{7});

    PairPartition b = classify_pair(sv(4, {1, 2, 3}), sv(4, {1, 2, 3}));
    CHECK(b.shared == std::vector<int>{1, 2, 3});
    CHECK(b.spare == std::vector<int>{4, 5, 6, 7});

    PairPartition c = classify_pair(sv(3, {1, 2}), sv(3, {1, 3}));
    CHECK(c.shared == std::vector<int>{1});
    CHECK(c.start_only == std::vector<int>{2});
    CHECK(c.end_only == std::vector<int>{3});
    CHECK(c.spare == std::vector<int>{4, 5});
}

TEST_CASE("shortest even distance matches the double cover") {
    CHECK(shortest_even_distance(sv(4, {1, 2, 3}), sv(4, {1, 2, 4})) == 2);
    CHECK(shortest_even_distance(sv(4, {1, 2, 3}), sv(4, {1, 2, 3})) == 0);
    CHECK(shortest_even_distance(sv(3, {1, 2}), sv(3, {3, 4})) == 4);
    for (int n : {3, 4}) {
        OddGraph og = odd_graph(n);
        for (Vertex s = 0; s < og.graph.vertex_count(); ++s) {
            const auto even = even_distances(og.graph, s);
            const auto plain = bfs_from(og.graph, s);
            for (Vertex t = 0; t < og.graph.vertex_count(); ++t) {
                const int d = shortest_even_distance(og.vertices[static_cast<std::size_t>(s)], og.vertices[static_cast<std::size_t>(t)]);
                CHECK(d == even[static_cast<std::size_t>(t)]);
                if (d == 2) CHECK(plain[static_cast<std::size_t>(t)] == 2);
            }
        }
    }
}

TEST_CASE("six-cycle through every 3-path") {
    std::array<SubsetVertex, 4> p{sv(3, {1, 2}), sv(3, {3, 4}), sv(3, {1, 5}), sv(3, {2, 3})};
    SpecialWalk c = six_cycle_through(p);
    CHECK(c.length() == 6);
    CHECK(c.closed);

    for (int n : {3, 4}) {
        OddGraph og = odd_graph(n);
        const auto& g = og.graph;
        int paths = 0;
        for (Vertex a = 0; a < g.vertex_count(); ++a)
            for (Vertex b : g.neighbors(a))
                for (Vertex cc : g.neighbors(b)) {
                    if (cc == a) continue;
                    for (Vertex d : g.neighbors(cc)) {
                        if (d == b || d == a) continue;
                        std::array<SubsetVertex, 4> path{og.vertices[static_cast<std::size_t>(a)], og.vertices[static_cast<std::size_t>(b)],
                                                         og.vertices[static_cast<std::size_t>(cc)], og.vertices[static_cast<std::size_t>(d)]};
                        SpecialWalk w = six_cycle_through(path);
                        ++paths;
                        CHECK_FALSE(walk_defect(w).has_value());
                        for (std::size_t i = 0; i < 4; ++i) CHECK(w.vertices[i] == path[i]);
                        std::vector<std::uint32_t> masks;
                        for (std::size_t i = 0; i < 6; ++i) masks.push_back(w.vertices[i].members);
                        std::sort(masks.begin(), masks.end());
                        CHECK(std::adjacent_find(masks.begin(), masks.end()) == masks.end());
                    }
                }
        CHECK(paths == g.vertex_count() * n * (n - 1) * (n - 1));
    }

    std::array<SubsetVertex, 4> bad{sv(3, {1, 2}), sv(3, {3, 4}), sv(3, {1, 2}), sv(3, {3, 4})};
    CHECK_THROWS_AS(six_cycle_through(bad), std::invalid_argument);
}

TEST_CASE("walk text format") {
    SpecialWalk w = walk_from_labels(sv(3, {1, 2}), std::vector<int>{3, 1, 4, 2, 5, 3, 2, 4, 1});
    std::ostringstream out;
    write_walk(out, w);
    CHECK(out.str().rfind("oddwalk n=3 len=9 closed=0\n1,2 4,5 ", 0) == 0);
    std::istringstream in(out.str());
    SpecialWalk back = read_walk(in);
    CHECK(back.vertices == w.vertices);
    CHECK(back.labels == w.labels);

    std::istringstream broken("oddwalk n=3 len=2 closed=0\n1,2 4,5 1,2\n3 3\n");
    CHECK_THROWS_AS(read_walk(broken), std::invalid_argument);
}
