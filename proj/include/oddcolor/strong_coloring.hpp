#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "oddcolor/graph.hpp"

namespace oddcolor {

/// Edge coloring indexed like g.edges(); colors are 1..palette, 0 = uncolored.
struct StrongColoring {
    int palette = 0;
    std::vector<int> colors;

    bool total() const;
    /// Largest color in use.
    int colors_used() const;
    int color_of(const SimpleGraph& g, Vertex a, Vertex b) const;

    friend bool operator==(const StrongColoring&, const StrongColoring&) = default;
};

StrongColoring uncolored(const SimpleGraph& g, int palette);

/// Copies colors between graphs that share vertex ids, matching edges by
/// endpoints. Edges of `to` missing from `from` stay uncolored.
StrongColoring transfer(const SimpleGraph& from, const StrongColoring& c, const SimpleGraph& to);

struct VerifyResult {
    bool ok = false;
    /// Conflicting edge-index pairs (i < j) sharing a color, ascending.
    std::vector<std::pair<int, int>> violations;
};

/// Checks the induced-matching condition: for every edge uv, all edges
/// touching u or v carry distinct colors. Throws std::invalid_argument for a
/// coloring that is partial, mis-sized, or outside 1..palette.
VerifyResult verify_strong_coloring(const SimpleGraph& g, const StrongColoring& c);

/// Same check restricted to colored edges; uncolored ones are ignored.
VerifyResult verify_partial_coloring(const SimpleGraph& g, const StrongColoring& c);

/// Edges in index order, each taking the least color unused by its conflicts.
StrongColoring greedy_strong_coloring(const SimpleGraph& g);

inline constexpr std::int64_t kDefaultSolverBudget = 20'000'000;

struct ExactResult {
    int colors = 0;       // best palette found (χ'_s when exact)
    int lower_bound = 0;  // proven lower bound
    StrongColoring witness;
    bool exact = false;
    std::int64_t nodes = 0;
};

/// Branch and bound (DSATUR order, clique lower bound, clique pre-coloring)
/// on the conflict graph. When the node budget runs out the result carries
/// the bounds reached so far with exact = false.
ExactResult exact_strong_chromatic_index(const SimpleGraph& g, std::int64_t budget = kDefaultSolverBudget);

/// Decision version: a strong coloring with at most `palette` colors.
/// `exhausted` is set when the budget ran out before a decision.
std::optional<StrongColoring> find_strong_coloring(const SimpleGraph& g, int palette,
                                                   std::int64_t budget = kDefaultSolverBudget,
                                                   bool* exhausted = nullptr);

/// `coloring K=<K>` then `c <u> <v> <color>` per edge. Reading skips blank
/// lines, `#` comments and the `trace`/`step` lines of a reduction trace, and requires every edge of g.
void write_coloring(std::ostream& out, const SimpleGraph& g, const StrongColoring& c);
StrongColoring read_coloring(std::istream& in, const SimpleGraph& g);
StrongColoring read_coloring_file(const std::string& path, const SimpleGraph& g);

}  // namespace oddcolor
