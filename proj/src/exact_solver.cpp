#include <algorithm>
#include <numeric>

#include "oddcolor/strong_coloring.hpp"

namespace oddcolor {

namespace {

struct BudgetExceeded {};

class Counter {
public:
    explicit Counter(std::int64_t budget) : budget_(budget) {}
    void tick() {
        if (++nodes_ > budget_) throw BudgetExceeded{};
    }
    std::int64_t nodes() const { return nodes_; }

private:
    std::int64_t budget_;
    std::int64_t nodes_ = 0;
};

// Maximum clique with a greedy-coloring bound; keeps the best clique found
// when the budget runs out.
class CliqueSearch {
public:
    CliqueSearch(const SimpleGraph& g, Counter& counter) : g_(g), counter_(counter) {
        const auto n = static_cast<std::size_t>(g.vertex_count());
        adj_.assign(n * n, 0);
        for (const Edge& e : g.edges()) {
            adj_[static_cast<std::size_t>(e.u) * n + static_cast<std::size_t>(e.v)] = 1;
            adj_[static_cast<std::size_t>(e.v) * n + static_cast<std::size_t>(e.u)] = 1;
        }
    }

    std::vector<Vertex> run() {
        std::vector<Vertex> order(static_cast<std::size_t>(g_.vertex_count()));
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g_.degree(a) > g_.degree(b); });
        std::vector<Vertex> current;
        try {
            expand(current, order);
        } catch (const BudgetExceeded&) {
        }
        return best_;
    }

private:
    bool adjacent(Vertex a, Vertex b) const {
        return adj_[static_cast<std::size_t>(a) * static_cast<std::size_t>(g_.vertex_count()) + static_cast<std::size_t>(b)];
    }

    void expand(std::vector<Vertex>& current, const std::vector<Vertex>& candidates) {
        counter_.tick();
        if (candidates.empty()) {
            if (current.size() > best_.size()) best_ = current;
            return;
        }
        // greedy color classes give an upper bound on what candidates can add
        std::vector<std::vector<Vertex>> classes;
        for (Vertex v : candidates) {
            auto it = std::find_if(classes.begin(), classes.end(), [&](const std::vector<Vertex>& cls) {
                return std::none_of(cls.begin(), cls.end(), [&](Vertex w) { return adjacent(v, w); });
            });
            if (it == classes.end())
                classes.push_back({v});
            else
                it->push_back(v);
        }
        std::vector<std::pair<Vertex, int>> ordered;
        for (std::size_t k = 0; k < classes.size(); ++k)
            for (Vertex v : classes[k]) ordered.emplace_back(v, static_cast<int>(k) + 1);
        std::vector<char> removed(static_cast<std::size_t>(g_.vertex_count()), 0);
        for (auto it = ordered.rbegin(); it != ordered.rend(); ++it) {
            if (current.size() + static_cast<std::size_t>(it->second) <= best_.size()) return;
            const Vertex v = it->first;
            std::vector<Vertex> next;
            for (Vertex w : candidates)
                if (!removed[static_cast<std::size_t>(w)] && w != v && adjacent(v, w)) next.push_back(w);
            current.push_back(v);
            expand(current, next);
            current.pop_back();
            removed[static_cast<std::size_t>(v)] = 1;
        }
    }

    const SimpleGraph& g_;
    Counter& counter_;
    std::vector<char> adj_;
    std::vector<Vertex> best_;
};

// DSATUR branch and bound on the conflict graph. Stops as soon as a coloring
// with at most `target` colors is found.
class ColorSearch {
public:
    ColorSearch(const SimpleGraph& conflicts, Counter& counter, int limit)
        : g_(conflicts), counter_(counter), limit_(limit) {
        const auto n = static_cast<std::size_t>(g_.vertex_count());
        color_.assign(n, 0);
        seen_.assign(n * static_cast<std::size_t>(limit + 1), 0);
        saturation_.assign(n, 0);
    }

    /// best_colors starts as the palette size already achieved (or limit+1).
    void run(const std::vector<Vertex>& clique, int best_colors, int target) {
        best_ = best_colors;
        target_ = target;
        for (std::size_t i = 0; i < clique.size(); ++i) assign(clique[i], static_cast<int>(i) + 1);
        used_ = static_cast<int>(clique.size());
        remaining_ = g_.vertex_count() - static_cast<int>(clique.size());
        search();
    }

    int best() const { return best_; }
    const std::vector<int>& witness() const { return witness_; }

private:
    int& seen(Vertex v, int c) {
        return seen_[static_cast<std::size_t>(v) * static_cast<std::size_t>(limit_ + 1) + static_cast<std::size_t>(c)];
    }

    void assign(Vertex v, int c) {
        color_[static_cast<std::size_t>(v)] = c;
        for (Vertex w : g_.neighbors(v))
            if (seen(w, c)++ == 0) ++saturation_[static_cast<std::size_t>(w)];
    }

    void unassign(Vertex v) {
        const int c = color_[static_cast<std::size_t>(v)];
        color_[static_cast<std::size_t>(v)] = 0;
        for (Vertex w : g_.neighbors(v))
            if (--seen(w, c) == 0) --saturation_[static_cast<std::size_t>(w)];
    }

    Vertex pick() const {
        Vertex best = -1;
        int best_sat = -1, best_deg = -1;
        for (Vertex v = 0; v < g_.vertex_count(); ++v) {
            if (color_[static_cast<std::size_t>(v)] != 0) continue;
            const int sat = saturation_[static_cast<std::size_t>(v)];
            if (sat < best_sat) continue;
            int deg = 0;
            for (Vertex w : g_.neighbors(v)) deg += color_[static_cast<std::size_t>(w)] == 0;
            if (sat == best_sat && deg <= best_deg) continue;
            best = v;
            best_sat = sat;
            best_deg = deg;
        }
        return best;
    }

    // true once the target is reached
    bool search() {
        counter_.tick();
        if (remaining_ == 0) {
            best_ = used_;
            witness_ = color_;
            return best_ <= target_;
        }
        const Vertex v = pick();
        if (saturation_[static_cast<std::size_t>(v)] >= best_ - 1) return false;
        for (int c = 1; c <= std::min(used_ + 1, best_ - 1); ++c) {
            if (seen(v, c) != 0) continue;
            const int saved = used_;
            used_ = std::max(used_, c);
            assign(v, c);
            --remaining_;
            const bool done = search();
            ++remaining_;
            unassign(v);
            used_ = saved;
            if (done) return true;
        }
        return false;
    }

    const SimpleGraph& g_;
    Counter& counter_;
    int limit_;
    std::vector<int> color_;
    std::vector<int> seen_;
    std::vector<int> saturation_;
    int used_ = 0;
    int remaining_ = 0;
    int best_ = 0;
    int target_ = 0;
    std::vector<int> witness_;
};

StrongColoring as_coloring(const std::vector<int>& colors, int palette) { return StrongColoring{palette, colors}; }

}  // namespace

ExactResult exact_strong_chromatic_index(const SimpleGraph& g, std::int64_t budget) {
    ExactResult out;
    if (g.edge_count() == 0) {
        out.exact = true;
        out.witness = uncolored(g, 0);
        return out;
    }
    const SimpleGraph conflicts = conflict_graph(g);
    const StrongColoring greedy = greedy_strong_coloring(g);
    out.colors = greedy.palette;
    out.witness = greedy;

    Counter counter(budget);
    const std::vector<Vertex> clique = CliqueSearch(conflicts, counter).run();
    out.lower_bound = static_cast<int>(clique.size());
    if (out.lower_bound >= out.colors) {
        out.exact = true;
        out.nodes = counter.nodes();
        return out;
    }
    ColorSearch search(conflicts, counter, out.colors);
    bool finished = true;
    try {
        search.run(clique, out.colors, out.lower_bound);
    } catch (const BudgetExceeded&) {
        finished = false;
    }
    if (!search.witness().empty() && search.best() < out.colors) {
        out.colors = search.best();
        out.witness = as_coloring(search.witness(), out.colors);
    }
    // a completed search proves optimality of the incumbent
    if (finished) out.lower_bound = out.colors;
    out.exact = out.lower_bound == out.colors;
    out.nodes = counter.nodes();
    return out;
}

std::optional<StrongColoring> find_strong_coloring(const SimpleGraph& g, int palette, std::int64_t budget,
                                                   bool* exhausted) {
    if (exhausted) *exhausted = false;
    if (palette < 0) return std::nullopt;
    if (g.edge_count() == 0) return uncolored(g, palette);
    StrongColoring greedy = greedy_strong_coloring(g);
    if (greedy.palette <= palette) {
        greedy.palette = palette;
        return greedy;
    }
    const SimpleGraph conflicts = conflict_graph(g);
    Counter counter(budget);
    const std::vector<Vertex> clique = CliqueSearch(conflicts, counter).run();
    if (static_cast<int>(clique.size()) > palette) return std::nullopt;
    ColorSearch search(conflicts, counter, palette + 1);
    try {
        search.run(clique, palette + 1, palette);
    } catch (const BudgetExceeded&) {
        if (exhausted) *exhausted = true;
    }
    if (search.witness().empty() || search.best() > palette) return std::nullopt;
    return as_coloring(search.witness(), palette);
}

}  // namespace oddcolor
