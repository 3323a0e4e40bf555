#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <sstream>

#include "corpus.hpp"
#include "oddcolor/reduction.hpp"
#include "oracles.hpp"

using namespace oddcolor;

namespace {

bool has_step(const ReductionTrace& t, StepKind k) {
    return std::any_of(t.steps.begin(), t.steps.end(), [&](const ReductionStep& s) { return s.kind == k; });
}

void set_color(const SimpleGraph& g, StrongColoring& c, Vertex a, Vertex b, int col) {
    c.colors[static_cast<std::size_t>(*g.edge_index(a, b))] = col;
}

// Random valid coloring with at most `palette` colors, or nullopt.
// Falls back to a solver coloring under a random color permutation.
std::optional<StrongColoring> random_coloring(const SimpleGraph& g, int palette, std::mt19937& rng) {
    for (int attempt = 0; attempt < 50; ++attempt) {
        StrongColoring c = uncolored(g, palette);
        std::vector<int> order(static_cast<std::size_t>(g.edge_count()));
        for (int i = 0; i < g.edge_count(); ++i) order[static_cast<std::size_t>(i)] = i;
        std::shuffle(order.begin(), order.end(), rng);
        bool ok = true;
        for (int i : order) {
            std::vector<int> free;
            for (int col = 1; col <= palette; ++col) {
                bool clash = false;
                for (int j = 0; j < g.edge_count() && !clash; ++j)
                    if (c.colors[static_cast<std::size_t>(j)] == col && oracle::conflict(g, i, j)) clash = true;
                if (!clash) free.push_back(col);
            }
            if (free.empty()) {
                ok = false;
                break;
            }
            c.colors[static_cast<std::size_t>(i)] = free[rng() % free.size()];
        }
        if (ok) return c;
    }
    auto found = find_strong_coloring(g, palette);
    if (!found) return std::nullopt;
    std::vector<int> perm(static_cast<std::size_t>(palette));
    for (int i = 0; i < palette; ++i) perm[static_cast<std::size_t>(i)] = i + 1;
    std::shuffle(perm.begin(), perm.end(), rng);
    for (auto& x : found->colors) x = perm[static_cast<std::size_t>(x - 1)];
    return found;
}

}  // namespace

TEST_CASE("extend_pendant examples") {
    const SimpleGraph star = generators::star(4);
    StrongColoring c = uncolored(star, 7);
    for (Vertex leaf = 1; leaf <= 4; ++leaf) c = extend_pendant(star, c, 0, leaf, 7);
    CHECK(c.colors == std::vector<int>{1, 2, 3, 4});

    // x = 0, y = 1, z = 2.
    const SimpleGraph p = build_graph({{0, 1}, {0, 2}});
    StrongColoring q = uncolored(p, 7);
    set_color(p, q, 0, 1, 1);
    q = extend_pendant(p, q, 0, 2, 7);
    CHECK(q.color_of(p, 0, 2) == 2);

    const SimpleGraph path3 = generators::path(4);
    CHECK_THROWS_AS(extend_pendant(path3, uncolored(path3, 7), 1, 2, 7), std::invalid_argument);
    CHECK_THROWS_AS(extend_pendant(star, uncolored(star, 7), 0, 1, 6), std::invalid_argument);
}

TEST_CASE("extend_pendant stays strong") {
    std::mt19937 rng(3);
    int done = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const SimpleGraph g = corpus::cycle_with_trees(rng, 8 + static_cast<int>(rng() % 6), 4, 0.5);
        const PeelResult peel = peel_pendants(g);
        if (peel.pendants.empty()) continue;
        const auto& [x, zs] = *peel.pendants.begin();
        const Vertex z = zs.front();
        int inner = 0;
        for (Vertex w : g.neighbors(x)) inner += g.degree(w) > 1;
        if (inner > 1) continue;
        auto base = random_coloring(g, 7, rng);
        if (!base) continue;
        set_color(g, *base, x, z, 0);
        const StrongColoring out = extend_pendant(g, *base, x, z, 7);
        CHECK(verify_strong_coloring(g, out).ok);
        ++done;
    }
    CHECK(done > 0);
}

TEST_CASE("reducible lengths") {
    CHECK(reducible_length(3) == 8);
    CHECK(reducible_length(4) == 7);
    CHECK(reducible_length(5) == 9);
}

TEST_CASE("extend_over_caterpillar on a bare path") {
    const SimpleGraph g = generators::path(9);
    const Thread t{{0, 1, 2, 3, 4, 5, 6, 7, 8}};
    const CaterpillarSpine spine = lift_thread(g, t);
    const SimpleGraph r = reduced_graph(g, spine);
    CHECK(r.edge_count() == 2);
    StrongColoring c = uncolored(r, 7);
    set_color(r, c, 0, 1, 1);
    set_color(r, c, 7, 8, 2);
    const StrongColoring out = extend_over_caterpillar(g, spine, c, 4);
    CHECK(verify_strong_coloring(g, out).ok);
    CHECK(out.colors_used() <= 7);
    CHECK(out.color_of(g, 0, 1) == 1);
    CHECK(out.color_of(g, 7, 8) == 2);

    const SimpleGraph g6 = generators::path(8);
    const CaterpillarSpine short_spine = lift_thread(g6, Thread{{0, 1, 2, 3, 4, 5, 6, 7}});
    const SimpleGraph r6 = reduced_graph(g6, short_spine);
    StrongColoring c6 = uncolored(r6, 7);
    set_color(r6, c6, 0, 1, 1);
    set_color(r6, c6, 6, 7, 2);
    CHECK_THROWS_AS(extend_over_caterpillar(g6, short_spine, c6, 4), std::invalid_argument);
}

TEST_CASE("extend_over_caterpillar keeps the reduced coloring") {
    std::mt19937 rng(41);
    int done = 0;
    for (int trial = 0; trial < 60; ++trial) {
        const int kappa = trial % 2 ? 3 : 4;
        const SimpleGraph sk = kappa == 3 ? corpus::complete(4) : corpus::complete(5);
        const SimpleGraph g = corpus::subdivided(rng, sk, reducible_length(kappa) + 1, kappa, 0.3);
        const PeelResult peel = peel_pendants(g);
        const auto thread = find_thread(peel.h, reducible_length(kappa));
        if (!thread) continue;
        Thread lifted;
        for (Vertex v : thread->path) lifted.path.push_back(peel.h_to_g[static_cast<std::size_t>(v)]);
        const CaterpillarSpine spine = lift_thread(g, lifted);
        const SimpleGraph r = reduced_graph(g, spine);
        auto c = random_coloring(r, 2 * kappa - 1, rng);
        if (!c) continue;
        const StrongColoring out = extend_over_caterpillar(g, spine, *c, kappa);
        CHECK(verify_strong_coloring(g, out).ok);
        CHECK(out.colors_used() <= 2 * kappa - 1);
        for (const Edge& e : r.edges()) CHECK(out.color_of(g, e.u, e.v) == c->color_of(r, e.u, e.v));
        ++done;
    }
    CHECK(done >= 20);
}

TEST_CASE("caterpillar cycles") {
    for (auto [k, d] : {std::pair{6, 4}, std::pair{7, 4}, std::pair{6, 3}}) {
        const StrongColoring c = color_caterpillar_cycle(k, d);
        CHECK(verify_strong_coloring(generators::caterpillar_cycle(k, d), c).ok);
        CHECK(c.colors_used() == 2 * d - 1);
    }
    CHECK_THROWS_AS(color_caterpillar_cycle(5, 4), std::invalid_argument);
    CHECK_THROWS_AS(color_caterpillar_cycle(7, 3), std::invalid_argument);
    CHECK_THROWS_AS(color_caterpillar_cycle(4, 4), std::invalid_argument);

    for (int d = 3; d <= 5; ++d)
        for (int k = 3; k <= 12; ++k) {
            const bool in_range = (k % 2 == 0 && k >= 6) || (k % 2 == 1 && k >= 2 * d - 1 && d >= 4);
            if (!in_range) continue;
            CAPTURE(k);
            CAPTURE(d);
            const StrongColoring c = color_caterpillar_cycle(k, d);
            CHECK(verify_strong_coloring(generators::caterpillar_cycle(k, d), c).ok);
            CHECK(c.colors_used() <= 2 * d - 1);
        }
}

TEST_CASE("cycle formula is optimal") {
    for (int m = 3; m <= 12; ++m) {
        const SimpleGraph g = generators::cycle(m);
        const std::vector<int> seq = cycle_colors(m);
        StrongColoring c = uncolored(g, *std::max_element(seq.begin(), seq.end()));
        for (int i = 0; i < m; ++i) set_color(g, c, i, (i + 1) % m, seq[static_cast<std::size_t>(i)]);
        CHECK(verify_strong_coloring(g, c).ok);
        CHECK(c.colors_used() == oracle::strong_index_by_partition(g));
    }
}

TEST_CASE("modes and preconditions") {
    CHECK(parse_variant("mad-based") == Variant::mad_based);
    CHECK(variant_name(Variant::subcubic_girth41) == "subcubic-girth41");
    CHECK_THROWS_AS(parse_variant("fast"), std::invalid_argument);
    CHECK_THROWS_AS(validate_mode({Variant::high_girth, 3}), std::invalid_argument);
    CHECK_THROWS_AS(validate_mode({Variant::subcubic_mad, 4}), std::invalid_argument);

    const PreconditionReport ok = check_preconditions(generators::cycle(40), {Variant::high_girth, 4});
    CHECK(ok.ok());
    const PreconditionReport k4 = check_preconditions(corpus::complete(4), {Variant::high_girth, 4});
    CHECK_FALSE(k4.ok());
    CHECK(k4.first_violation().find("girth") != std::string::npos);
    CHECK(check_preconditions(generators::caterpillar_cycle(7, 4), {Variant::mad_based, 4}).ok());
    CHECK_FALSE(check_preconditions(generators::caterpillar_cycle(5, 4), {Variant::mad_based, 4}).ok());
}

TEST_CASE("sparse coloring examples") {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 40; ++i) e.emplace_back(i, (i + 1) % 40);
    int next = 40;
    for (int i = 0; i < 40; i += 5)
        for (int k = 0; k < 2; ++k) e.emplace_back(i, next++);
    const SimpleGraph g = build_graph(next, e);
    const SparseResult r = strong_color_sparse(g, {Variant::high_girth, 4}, true);
    REQUIRE(r.coloring.has_value());
    CHECK(verify_strong_coloring(g, *r.coloring).ok);
    CHECK(r.coloring->colors_used() <= 7);
    CHECK(replay_trace(g, r.trace) == *r.coloring);

    const SimpleGraph cc = generators::caterpillar_cycle(7, 4);
    const SparseResult rc = strong_color_sparse(cc, {Variant::mad_based, 4}, true);
    REQUIRE(rc.coloring.has_value());
    CHECK(rc.coloring->colors_used() == 7);
    CHECK(has_step(rc.trace, StepKind::cycle_caterpillar));
    CHECK(replay_trace(cc, rc.trace) == *rc.coloring);

    CHECK_THROWS_AS(strong_color_sparse(corpus::complete(4), {Variant::high_girth, 4}, true), std::invalid_argument);
    CHECK_THROWS_AS(strong_color_sparse(generators::star(5), {Variant::high_girth, 4}), std::invalid_argument);

    const SparseResult star = strong_color_sparse(generators::star(4), {Variant::high_girth, 4});
    REQUIRE(star.coloring.has_value());
    CHECK(star.coloring->colors_used() == 4);
    CHECK(has_step(star.trace, StepKind::star_base));

    const SparseResult empty = strong_color_sparse(SimpleGraph(3), {Variant::high_girth, 4});
    REQUIRE(empty.coloring.has_value());
    CHECK(empty.trace.steps.empty());
}

TEST_CASE("sparse coloring over random corpora") {
    for (int delta : {3, 4}) {
        const int girth = delta == 3 ? 41 : 36;
        const Variant v = delta == 3 ? Variant::subcubic_girth41 : Variant::high_girth;
        for (const auto& [name, g] : corpus::sparse_graphs(delta, girth, 24, 7U + static_cast<unsigned>(delta))) {
            CAPTURE(name);
            CHECK(g.max_degree() <= delta);
            const SparseResult r = strong_color_sparse(g, {v, delta}, true);
            REQUIRE(r.coloring.has_value());
            CHECK(verify_strong_coloring(g, *r.coloring).ok);
            CHECK(r.coloring->colors_used() <= 2 * delta - 1);
            CHECK(replay_trace(g, r.trace) == *r.coloring);
        }
    }
}

TEST_CASE("failures carry the stuck graph") {
    // Two K4s joined by a long path: no thread survives inside the dense parts.
    std::vector<std::pair<int, int>> e;
    for (int base : {0, 4})
        for (int u = 0; u < 4; ++u)
            for (int w = u + 1; w < 4; ++w) e.emplace_back(base + u, base + w);
    e.emplace_back(0, 4);
    const SimpleGraph g = build_graph(e);
    const SparseResult r = strong_color_sparse(g, {Variant::high_girth, 4});
    if (r.coloring) {
        CHECK(verify_strong_coloring(g, *r.coloring).ok);
    } else {
        REQUIRE(r.failure.has_value());
        CHECK_FALSE(r.failure->reason.empty());
    }
}

TEST_CASE("trace text round trip and tampering") {
    const SimpleGraph g = generators::caterpillar_cycle(6, 4);
    const SparseResult r = strong_color_sparse(g, {Variant::mad_based, 4});
    REQUIRE(r.coloring.has_value());
    std::stringstream ss;
    write_trace(ss, r.trace);
    CHECK(ss.str().rfind("trace K=7 steps=", 0) == 0);
    const ReductionTrace back = read_trace(ss);
    CHECK(back == r.trace);

    std::mt19937 rng(2);
    const auto corpus4 = corpus::sparse_graphs(4, 36, 6, 99);
    for (const auto& [name, h] : corpus4) {
        const SparseResult rh = strong_color_sparse(h, {Variant::high_girth, 4});
        REQUIRE(rh.coloring.has_value());
        ReductionTrace bad = rh.trace;
        for (auto& step : bad.steps)
            if (step.kind != StepKind::exact_base && !step.colors.empty()) {
                auto& col = step.colors.front().second;
                col = col % 7 + 1;
                break;
            }
        if (bad == rh.trace) continue;
        CHECK_THROWS_AS(replay_trace(h, bad), std::runtime_error);
    }

    std::istringstream junk("trace K=7 steps=1\nstep sideways k=0 vertices=1 edges=\n");
    CHECK_THROWS_AS(read_trace(junk), std::invalid_argument);
}
