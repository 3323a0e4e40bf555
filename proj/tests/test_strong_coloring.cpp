#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <sstream>

#include "oddcolor/strong_coloring.hpp"
#include "oracles.hpp"

using namespace oddcolor;

namespace {

// Colors edge v_i v_{i+1} of generators::cycle(m) with seq[i].
StrongColoring around_cycle(const SimpleGraph& g, const std::vector<int>& seq, int palette) {
    StrongColoring c = uncolored(g, palette);
    const int m = static_cast<int>(seq.size());
    for (int i = 0; i < m; ++i) c.colors[static_cast<std::size_t>(*g.edge_index(i, (i + 1) % m))] = seq[static_cast<std::size_t>(i)];
    return c;
}

}  // namespace

TEST_CASE("verifier examples") {
    const SimpleGraph c6 = generators::cycle(6);
    CHECK(verify_strong_coloring(c6, around_cycle(c6, {1, 2, 3, 1, 2, 3}, 3)).ok);
    VerifyResult bad = verify_strong_coloring(c6, around_cycle(c6, {1, 2, 1, 2, 1, 2}, 2));
    CHECK_FALSE(bad.ok);
    CHECK(bad.violations.size() == 6);

    const SimpleGraph c5 = generators::cycle(5);
    CHECK(verify_strong_coloring(c5, around_cycle(c5, {1, 2, 3, 4, 5}, 5)).ok);
    CHECK_FALSE(verify_strong_coloring(c5, around_cycle(c5, {1, 2, 3, 1, 4}, 4)).ok);

    StrongColoring partial = around_cycle(c6, {1, 2, 3, 1, 2, 3}, 3);
    partial.colors[0] = 0;
    CHECK_THROWS_AS(verify_strong_coloring(c6, partial), std::invalid_argument);
    CHECK(verify_partial_coloring(c6, partial).ok);
    StrongColoring wide = around_cycle(c6, {1, 2, 3, 1, 2, 4}, 3);
    CHECK_THROWS_AS(verify_strong_coloring(c6, wide), std::invalid_argument);
    StrongColoring short_c{3, {1, 2}};
    CHECK_THROWS_AS(verify_strong_coloring(c6, short_c), std::invalid_argument);
}

TEST_CASE("verifier agrees with the conflict definition") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 400; ++trial) {
        const SimpleGraph g = oracle::random_graph(rng, 3 + static_cast<int>(rng() % 6), 0.4);
        if (g.edge_count() == 0) continue;
        const int k = 1 + static_cast<int>(rng() % 6);
        StrongColoring c = uncolored(g, k);
        for (auto& x : c.colors) x = 1 + static_cast<int>(rng() % static_cast<unsigned>(k));
        const VerifyResult r = verify_strong_coloring(g, c);
        CHECK(r.ok == oracle::proper_strong(g, c.colors));
        for (auto [i, j] : r.violations) {
            CHECK(i < j);
            CHECK(c.colors[static_cast<std::size_t>(i)] == c.colors[static_cast<std::size_t>(j)]);
            CHECK(oracle::conflict(g, i, j));
        }
    }
}

TEST_CASE("greedy examples") {
    CHECK(greedy_strong_coloring(generators::path(4)).colors_used() == 3);
    CHECK(greedy_strong_coloring(build_graph({{0, 1}})).colors_used() == 1);
    const SimpleGraph p = generators::petersen();
    const StrongColoring c = greedy_strong_coloring(p);
    CHECK(c.colors_used() <= 13);
    CHECK(verify_strong_coloring(p, c).ok);
}

TEST_CASE("exact examples") {
    CHECK(exact_strong_chromatic_index(generators::star(5)).colors == 5);
    CHECK(exact_strong_chromatic_index(generators::cycle(5)).colors == 5);
    CHECK(exact_strong_chromatic_index(generators::cycle(6)).colors == 3);
    CHECK(exact_strong_chromatic_index(generators::cycle(7)).colors == 4);
    CHECK(exact_strong_chromatic_index(SimpleGraph(4)).colors == 0);
    const ExactResult r = exact_strong_chromatic_index(generators::caterpillar_cycle(6, 4));
    CHECK(r.exact);
    CHECK(r.colors == 7);
    CHECK(verify_strong_coloring(generators::caterpillar_cycle(6, 4), r.witness).ok);
    CHECK(exact_strong_chromatic_index(generators::petersen()).colors == 5);
}

TEST_CASE("exact solver matches partition enumeration") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 250; ++trial) {
        const int n = 4 + static_cast<int>(rng() % 5);
        const int m = 1 + static_cast<int>(rng() % 8);
        const SimpleGraph g = oracle::random_graph_edges(rng, n, m);
        const ExactResult r = exact_strong_chromatic_index(g);
        CHECK(r.exact);
        CHECK(r.colors == oracle::strong_index_by_partition(g));
        CHECK(r.lower_bound <= r.colors);
        CHECK(verify_strong_coloring(g, r.witness).ok);
        CHECK(r.witness.colors_used() == r.colors);
        const StrongColoring gr = greedy_strong_coloring(g);
        CHECK(verify_strong_coloring(g, gr).ok);
        CHECK(gr.colors_used() >= r.colors);
    }
}

TEST_CASE("decision variant") {
    const SimpleGraph c5 = generators::cycle(5);
    CHECK_FALSE(find_strong_coloring(c5, 4).has_value());
    auto five = find_strong_coloring(c5, 5);
    REQUIRE(five.has_value());
    CHECK(verify_strong_coloring(c5, *five).ok);

    bool exhausted = true;
    CHECK(find_strong_coloring(generators::cycle(9), 3, kDefaultSolverBudget, &exhausted).has_value());
    CHECK_FALSE(exhausted);
}

TEST_CASE("budget exhaustion is reported") {
    const ExactResult r = exact_strong_chromatic_index(generators::petersen(), 3);
    CHECK_FALSE(r.exact);
    CHECK(r.lower_bound <= 5);
    CHECK(r.colors >= 5);
    CHECK(verify_strong_coloring(generators::petersen(), r.witness).ok);
}

TEST_CASE("transfer between graphs") {
    const SimpleGraph c6 = generators::cycle(6);
    const SimpleGraph p = generators::path(6);
    StrongColoring c = around_cycle(c6, {1, 2, 3, 1, 2, 3}, 3);
    StrongColoring t = transfer(c6, c, p);
    CHECK(t.total());
    CHECK(t.color_of(p, 2, 3) == c.color_of(c6, 2, 3));
    StrongColoring back = transfer(p, t, c6);
    CHECK_FALSE(back.total());
    CHECK(back.color_of(c6, 5, 0) == 0);
}

TEST_CASE("coloring text format") {
    const SimpleGraph g = generators::cycle(6);
    const StrongColoring c = around_cycle(g, {1, 2, 3, 1, 2, 3}, 3);
    std::stringstream ss;
    write_coloring(ss, g, c);
    CHECK(ss.str().rfind("coloring K=3\n", 0) == 0);
    CHECK(read_coloring(ss, g) == c);

    std::istringstream with_trace("trace K=3 steps=1\nstep cycle k=0 vertices=0 edges=\ncoloring K=3\n# note\n\nc 0 1 1\nc 1 2 2\nc 2 3 3\nc 3 4 1\nc 4 5 2\nc 0 5 3\n");
    CHECK(read_coloring(with_trace, g) == c);

    std::istringstream missing("coloring K=3\nc 0 1 1\n");
    CHECK_THROWS_AS(read_coloring(missing, g), std::invalid_argument);
    std::istringstream twice("coloring K=3\nc 0 1 1\nc 1 0 1\nc 1 2 2\nc 2 3 3\nc 3 4 1\nc 4 5 2\nc 0 5 3\n");
    CHECK_THROWS_AS(read_coloring(twice, g), std::invalid_argument);
    std::istringstream nonedge("coloring K=3\nc 0 3 1\n");
    CHECK_THROWS_AS(read_coloring(nonedge, g), std::invalid_argument);
    std::istringstream noheader("c 0 1 1\n");
    CHECK_THROWS_AS(read_coloring(noheader, g), std::invalid_argument);
}
