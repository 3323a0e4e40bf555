#include <algorithm>
#include <stdexcept>

#include "oddcolor/reduction.hpp"

namespace oddcolor {

namespace {

constexpr int kBaseEdges = 24;

SimpleGraph with_added_edges(const SimpleGraph& g, const std::vector<Edge>& extra) {
    std::vector<std::pair<int, int>> list;
    list.reserve(static_cast<std::size_t>(g.edge_count()) + extra.size());
    for (const Edge& e : g.edges()) list.emplace_back(e.u, e.v);
    for (const Edge& e : extra) list.emplace_back(e.u, e.v);
    return build_graph(g.vertex_count(), list);
}

std::vector<Edge> edges_not_in(const SimpleGraph& g, const SimpleGraph& r) {
    std::vector<Edge> out;
    for (const Edge& e : g.edges())
        if (!r.has_edge(e.u, e.v)) out.push_back(e);
    return out;
}

std::vector<std::pair<Edge, int>> colors_on(const SimpleGraph& g, const StrongColoring& c, const std::vector<Edge>& edges) {
    std::vector<std::pair<Edge, int>> out;
    for (const Edge& e : edges) out.emplace_back(e, c.colors[static_cast<std::size_t>(*g.edge_index(e.u, e.v))]);
    return out;
}

std::optional<Vertex> star_center(const SimpleGraph& g) {
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == g.edge_count()) return v;
    return std::nullopt;
}

// Vertices of a 2-regular connected graph in cyclic order from the least one.
std::vector<Vertex> cycle_order(const SimpleGraph& h, Vertex start) {
    std::vector<Vertex> out{start};
    Vertex prev = start, cur = h.neighbors(start)[0];
    while (cur != start) {
        out.push_back(cur);
        auto nb = h.neighbors(cur);
        Vertex next = nb[0] == prev ? nb[1] : nb[0];
        prev = cur;
        cur = next;
    }
    return out;
}

std::optional<std::vector<Vertex>> core_cycle(const PeelResult& peel) {
    const auto active = peel.h.active_vertices();
    if (active.size() < 3) return std::nullopt;
    for (Vertex v : active)
        if (peel.h.degree(v) != 2) return std::nullopt;
    if (components(peel.h).size() != 1) return std::nullopt;
    std::vector<Vertex> cycle = cycle_order(peel.h, active.front());
    for (Vertex& v : cycle) v = peel.h_to_g[static_cast<std::size_t>(v)];
    return cycle;
}

struct Colored {
    SimpleGraph g;
    StrongColoring c;
};

class Reducer {
public:
    Reducer(const AlgorithmMode& mode, std::int64_t budget) : mode_(mode), palette_(mode.palette()), budget_(budget) {}

    std::optional<Colored> solve(SimpleGraph g) {
        if (g.edge_count() == 0) return Colored{std::move(g), uncolored(SimpleGraph(), palette_)};
        {
            auto comps = components(g);
            if (comps.size() > 1) {
                if (g.edge_count() <= kBaseEdges) return exact_base(std::move(g));
                return split(std::move(g), comps);
            }
        }
        if (auto center = star_center(g)) return star_base(std::move(g), *center);

        // the peel is scoped so that recursion does not keep it alive
        Vertex x = -1, z = -1;
        std::optional<CaterpillarSpine> spine;
        {
            const PeelResult peel = peel_pendants(g);
            const auto cycle = core_cycle(peel);
            if (cycle) {
                if (static_cast<std::size_t>(g.edge_count()) == cycle->size()) return pure_cycle(std::move(g), *cycle);
                for (int d = std::max(3, g.max_degree()); d <= mode_.delta; ++d)
                    if (auto walk = cyclic_walk(d, static_cast<int>(cycle->size()))) {
                        auto colors = color_cycle_with_pendants(g, *cycle, *walk);
                        return terminal(std::move(g), StepKind::cycle_caterpillar, d, *cycle, std::move(colors));
                    }
            }
            if (g.edge_count() <= kBaseEdges) return exact_base(std::move(g));

            for (Vertex hx = 0; hx < peel.h.vertex_count() && x < 0; ++hx)
                if (peel.h.degree(hx) == 1) {
                    x = peel.h_to_g[static_cast<std::size_t>(hx)];
                    z = peel.pendants.at(x).front();
                }
            if (x < 0) {
                auto thread = find_thread(peel.h, reducible_length(mode_.delta));
                if (thread && !(thread->closed() && cycle)) {
                    for (Vertex& v : thread->path) v = peel.h_to_g[static_cast<std::size_t>(v)];
                    spine = lift_thread(g, *thread);
                }
            }
        }
        if (x >= 0) return pendant(std::move(g), x, z);
        if (spine) return caterpillar(std::move(g), *spine);
        return fail(std::move(g), "no star, cycle, pendant edge or " + std::to_string(reducible_length(mode_.delta)) +
                                      "-thread to reduce");
    }

    std::vector<ReductionStep> steps;
    std::optional<ReductionFailure> failure;

private:
    std::optional<Colored> fail(SimpleGraph g, std::string reason) {
        if (!failure) failure = ReductionFailure{std::move(reason), std::move(g)};
        return std::nullopt;
    }

    std::optional<Colored> terminal(SimpleGraph g, StepKind kind, int parameter, std::vector<Vertex> vertices,
                                    std::vector<std::pair<Edge, int>> colors) {
        StrongColoring c = uncolored(g, palette_);
        for (const auto& [e, col] : colors) c.colors[static_cast<std::size_t>(*g.edge_index(e.u, e.v))] = col;
        if (c.colors_used() > palette_)
            return fail(std::move(g), step_kind_name(kind) + " needs more than " + std::to_string(palette_) + " colors");
        steps.push_back({kind, parameter, std::move(vertices), std::move(colors)});
        return Colored{std::move(g), std::move(c)};
    }

    std::optional<Colored> star_base(SimpleGraph g, Vertex center) {
        std::vector<Vertex> vertices{center};
        std::vector<std::pair<Edge, int>> colors;
        for (Vertex leaf : g.neighbors(center)) {
            vertices.push_back(leaf);
            colors.emplace_back(Edge(center, leaf), static_cast<int>(colors.size()) + 1);
        }
        return terminal(std::move(g), StepKind::star_base, 0, std::move(vertices), std::move(colors));
    }

    std::optional<Colored> pure_cycle(SimpleGraph g, const std::vector<Vertex>& cycle) {
        const std::vector<int> cc = cycle_colors(static_cast<int>(cycle.size()));
        std::vector<std::pair<Edge, int>> colors;
        for (std::size_t i = 0; i < cycle.size(); ++i)
            colors.emplace_back(Edge(cycle[i], cycle[(i + 1) % cycle.size()]), cc[i]);
        return terminal(std::move(g), StepKind::cycle, 0, cycle, std::move(colors));
    }

    std::optional<Colored> exact_base(SimpleGraph g) {
        bool exhausted = false;
        auto found = find_strong_coloring(g, palette_, budget_, &exhausted);
        if (!found)
            return fail(std::move(g), exhausted ? "exact base solver ran out of budget"
                                                : "base graph has no strong " + std::to_string(palette_) + "-coloring");
        std::vector<Edge> all(g.edges().begin(), g.edges().end());
        auto colors = colors_on(g, *found, all);
        auto vertices = g.active_vertices();
        return terminal(std::move(g), StepKind::exact_base, 0, std::move(vertices), std::move(colors));
    }

    std::optional<Colored> split(SimpleGraph g, const std::vector<std::vector<Vertex>>& comps) {
        StrongColoring c = uncolored(g, palette_);
        std::vector<char> in_comp(static_cast<std::size_t>(g.vertex_count()), 0);
        for (const auto& comp : comps) {
            std::fill(in_comp.begin(), in_comp.end(), 0);
            for (Vertex v : comp) in_comp[static_cast<std::size_t>(v)] = 1;
            std::vector<Edge> kept;
            for (const Edge& e : g.edges())
                if (in_comp[static_cast<std::size_t>(e.u)]) kept.push_back(e);
            auto part = solve(g.with_edges(kept));
            if (!part) return std::nullopt;
            for (const Edge& e : kept)
                c.colors[static_cast<std::size_t>(*g.edge_index(e.u, e.v))] = part->c.color_of(part->g, e.u, e.v);
        }
        return Colored{std::move(g), std::move(c)};
    }

    std::optional<Colored> pendant(SimpleGraph g, Vertex x, Vertex z) {
        const Vertex removed[] = {z};
        SimpleGraph r = g.without_vertices(removed);
        g = SimpleGraph();
        auto sub = solve(std::move(r));
        if (!sub) return std::nullopt;
        SimpleGraph full = with_added_edges(sub->g, {Edge(x, z)});
        StrongColoring c = extend_pendant(full, transfer(sub->g, sub->c, full), x, z, palette_);
        steps.push_back({StepKind::pendant, 0, {x, z}, colors_on(full, c, {Edge(x, z)})});
        return Colored{std::move(full), std::move(c)};
    }

    std::optional<Colored> caterpillar(SimpleGraph g, const CaterpillarSpine& spine) {
        SimpleGraph r = reduced_graph(g, spine);
        const std::vector<Edge> removed = edges_not_in(g, r);
        g = SimpleGraph();
        auto sub = solve(std::move(r));
        if (!sub) return std::nullopt;
        SimpleGraph full = with_added_edges(sub->g, removed);
        StrongColoring c = extend_over_caterpillar(full, spine, sub->c, mode_.delta);
        steps.push_back({StepKind::caterpillar, mode_.delta, spine.spine, colors_on(full, c, removed)});
        return Colored{std::move(full), std::move(c)};
    }

    AlgorithmMode mode_;
    int palette_;
    std::int64_t budget_;
};

std::string length_text(std::optional<int> v) { return format_length(v); }

Measurement at_least(const std::string& name, std::optional<int> value, int bound) {
    return {name, length_text(value), ">= " + std::to_string(bound), !value || *value >= bound};
}

}  // namespace

std::string variant_name(Variant v) {
    switch (v) {
        case Variant::high_girth: return "high-girth";
        case Variant::subcubic_girth41: return "subcubic-girth41";
        case Variant::mad_based: return "mad-based";
        case Variant::subcubic_mad: return "subcubic-mad";
    }
    return "?";
}

Variant parse_variant(const std::string& name) {
    for (Variant v : {Variant::high_girth, Variant::subcubic_girth41, Variant::mad_based, Variant::subcubic_mad})
        if (variant_name(v) == name) return v;
    throw std::invalid_argument("unknown mode '" + name + "'");
}

void validate_mode(const AlgorithmMode& mode) {
    const bool subcubic = mode.variant == Variant::subcubic_girth41 || mode.variant == Variant::subcubic_mad;
    if (subcubic && mode.delta != 3) throw std::invalid_argument(variant_name(mode.variant) + " requires Δ = 3");
    if (!subcubic && mode.delta < 4) throw std::invalid_argument(variant_name(mode.variant) + " requires Δ >= 4");
    if (mode.delta > kMaxOddParameter) throw std::invalid_argument("Δ above " + std::to_string(kMaxOddParameter));
}

bool PreconditionReport::ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const Measurement& m) { return m.ok; });
}

std::string PreconditionReport::first_violation() const {
    for (const auto& m : checks)
        if (!m.ok) return m.name + " = " + m.value + ", needs " + m.requirement;
    return "";
}

PreconditionReport check_preconditions(const SimpleGraph& g, const AlgorithmMode& mode) {
    validate_mode(mode);
    PreconditionReport r;
    const int d = mode.delta;
    r.checks.push_back({"max degree", std::to_string(g.max_degree()), "<= " + std::to_string(d), g.max_degree() <= d});
    const GirthProfile gp = girth_profile(g);
    auto mad_below = [&](std::int64_t p, std::int64_t q) {
        const Density m = g.vertex_count() == 0 ? Density{} : mad(g);
        Density bound{p, q, {}};
        r.checks.push_back({"mad", m.to_string(), "< " + bound.to_string(), m.less_than(p, q)});
    };
    switch (mode.variant) {
        case Variant::high_girth: r.checks.push_back(at_least("girth", gp.girth, 10 * d - 4)); break;
        case Variant::subcubic_girth41: r.checks.push_back(at_least("girth", gp.girth, 41)); break;
        case Variant::mad_based:
            r.checks.push_back(at_least("even girth", gp.even_girth, 6));
            r.checks.push_back(at_least("odd girth", gp.odd_girth, 2 * d - 1));
            mad_below(6 * d - 3, 3 * d - 2);
            break;
        case Variant::subcubic_mad:
            r.checks.push_back(at_least("girth", gp.girth, 8));
            mad_below(48, 23);
            break;
    }
    return r;
}

std::string step_kind_name(StepKind k) {
    switch (k) {
        case StepKind::star_base: return "star-base";
        case StepKind::exact_base: return "exact-base";
        case StepKind::cycle: return "cycle";
        case StepKind::cycle_caterpillar: return "cycle-caterpillar";
        case StepKind::pendant: return "pendant";
        case StepKind::caterpillar: return "caterpillar";
    }
    return "?";
}

StepKind parse_step_kind(const std::string& name) {
    for (StepKind k : {StepKind::star_base, StepKind::exact_base, StepKind::cycle, StepKind::cycle_caterpillar,
                       StepKind::pendant, StepKind::caterpillar})
        if (step_kind_name(k) == name) return k;
    throw std::invalid_argument("unknown step kind '" + name + "'");
}

SparseResult strong_color_sparse(const SimpleGraph& g, const AlgorithmMode& mode, bool strict, std::int64_t budget) {
    SparseResult out;
    out.preconditions = check_preconditions(g, mode);
    if (g.max_degree() > mode.delta)
        throw std::invalid_argument("precondition failed: " + out.preconditions.first_violation());
    if (strict && !out.preconditions.ok())
        throw std::invalid_argument("precondition failed: " + out.preconditions.first_violation());

    Reducer reducer(mode, budget);
    auto result = reducer.solve(g);
    out.trace.palette = mode.palette();
    out.trace.steps = std::move(reducer.steps);
    if (!result) {
        out.failure = std::move(reducer.failure);
        return out;
    }
    StrongColoring c = transfer(result->g, result->c, g);
    c.palette = mode.palette();
    if (!verify_strong_coloring(g, c).ok || c.colors_used() > mode.palette())
        throw std::logic_error("reduction produced an invalid coloring");
    out.coloring = std::move(c);
    return out;
}

StrongColoring replay_trace(const SimpleGraph& g, const ReductionTrace& trace) {
    StrongColoring cur = uncolored(g, trace.palette);
    std::vector<Edge> colored;
    for (std::size_t s = 0; s < trace.steps.size(); ++s) {
        const ReductionStep& step = trace.steps[s];
        auto bad = [&](const std::string& what) {
            return std::runtime_error("trace step " + std::to_string(s + 1) + " (" + step_kind_name(step.kind) +
                                      "): " + what);
        };
        std::vector<Edge> fresh;
        for (const auto& [e, col] : step.colors) {
            auto idx = g.edge_index(e.u, e.v);
            if (!idx) throw bad("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " not in the graph");
            if (cur.colors[static_cast<std::size_t>(*idx)] != 0) throw bad("edge colored twice");
            fresh.push_back(e);
        }
        std::vector<Edge> present = colored;
        present.insert(present.end(), fresh.begin(), fresh.end());
        std::sort(present.begin(), present.end());
        const SimpleGraph p = g.with_edges(present);
        const auto& vs = step.vertices;

        std::vector<std::pair<Edge, int>> expected;
        try {
            switch (step.kind) {
                case StepKind::exact_base: expected = step.colors; break;
                case StepKind::star_base:
                    if (vs.empty()) throw bad("missing center");
                    for (std::size_t i = 1; i < vs.size(); ++i) expected.emplace_back(Edge(vs[0], vs[i]), static_cast<int>(i));
                    break;
                case StepKind::cycle: {
                    const std::vector<int> cc = cycle_colors(static_cast<int>(vs.size()));
                    for (std::size_t i = 0; i < vs.size(); ++i) expected.emplace_back(Edge(vs[i], vs[(i + 1) % vs.size()]), cc[i]);
                    break;
                }
                case StepKind::cycle_caterpillar: {
                    auto walk = cyclic_walk(step.parameter, static_cast<int>(vs.size()));
                    if (!walk) throw bad("no closed walk for this cycle");
                    expected = color_cycle_with_pendants(p, vs, *walk);
                    break;
                }
                case StepKind::pendant: {
                    if (vs.size() != 2) throw bad("pendant step needs x and z");
                    const StrongColoring c = extend_pendant(p, transfer(g, cur, p), vs[0], vs[1], trace.palette);
                    expected.emplace_back(Edge(vs[0], vs[1]), c.color_of(p, vs[0], vs[1]));
                    break;
                }
                case StepKind::caterpillar: {
                    const CaterpillarSpine spine = lift_thread(p, Thread{vs});
                    const SimpleGraph r = reduced_graph(p, spine);
                    const StrongColoring c = extend_over_caterpillar(p, spine, transfer(g, cur, r), step.parameter);
                    for (const Edge& e : edges_not_in(p, r)) expected.emplace_back(e, c.color_of(p, e.u, e.v));
                    break;
                }
            }
        } catch (const std::logic_error& e) {
            throw bad(e.what());
        }
        auto recorded = step.colors;
        std::sort(expected.begin(), expected.end());
        std::sort(recorded.begin(), recorded.end());
        if (expected != recorded) throw bad("recomputed colors differ from the recorded ones");
        for (const auto& [e, col] : step.colors) cur.colors[static_cast<std::size_t>(*g.edge_index(e.u, e.v))] = col;
        colored = std::move(present);
    }
    if (!verify_partial_coloring(g, cur).ok) throw std::runtime_error("replayed coloring has conflicts");
    return cur;
}

}  // namespace oddcolor
