#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "oddcolor/graph.hpp"
#include "oddcolor/odd_graph.hpp"
#include "oddcolor/strong_coloring.hpp"

namespace oddcolor {

/// Colors xz, where z is a degree-1 neighbor of x, with the least color in
/// 1..palette unused by the edges conflicting with xz. `c` is indexed by the
/// edges of g; xz must be uncolored and other uncolored edges are ignored.
/// Throws std::invalid_argument when z is not a pendant of x, when x has two
/// non-pendant neighbors besides z, or when palette < 2Δ(g)-1;
/// std::logic_error when no color is free.
StrongColoring extend_pendant(const SimpleGraph& g, const StrongColoring& c, Vertex x, Vertex z, int palette);

/// g minus the spine vertices u_2..u_{ℓ-1} and the pendants of u_1 and u_ℓ.
/// The end edges u_0u_1 and u_ℓu_{ℓ+1} stay.
SimpleGraph reduced_graph(const SimpleGraph& g, const CaterpillarSpine& spine);

/// Shortest caterpillar that is (2κ-1)-reducible: 2κ-1 for κ >= 4, 8 for κ = 3.
int reducible_length(int kappa);

/// Extends a strong (2κ-1)-coloring of reduced_graph(g, spine), indexed by
/// that graph's edges, to all of g by walking in O_κ. The result is indexed
/// by g and agrees with `c` on the reduced graph.
StrongColoring extend_over_caterpillar(const SimpleGraph& g, const CaterpillarSpine& spine, const StrongColoring& c,
                                       int kappa);

/// Colors of the edges around a cycle with pendants, driven by a closed
/// special walk in O_d: the cycle edge v_iv_{i+1} gets label(w_iw_{i+1}) and
/// the pendants of v_i get the rest of the complement of [w_i], ascending.
/// `cycle` lists the cycle vertices in order (without repeating the first).
std::vector<std::pair<Edge, int>> color_cycle_with_pendants(const SimpleGraph& g, const std::vector<Vertex>& cycle,
                                                            const SpecialWalk& walk);

/// Strong (2Δ-1)-coloring of C_{κ,Δ} for (κ even, κ >= 6, Δ >= 3) or
/// (κ odd, κ >= 2Δ-1, Δ >= 4).
StrongColoring color_caterpillar_cycle(int kappa, int max_degree);

/// Closed special walk of the given length in O_d that is also
/// non-backtracking at the wrap, or nullopt when none is found.
std::optional<SpecialWalk> cyclic_walk(int d, int length);

/// Edge colors 1.. around C_m: period 123 when 3 | m, five colors for m = 5,
/// otherwise blocks of 1234 followed by blocks of 123 (four colors).
std::vector<int> cycle_colors(int length);

enum class Variant { high_girth, subcubic_girth41, mad_based, subcubic_mad };

struct AlgorithmMode {
    Variant variant = Variant::high_girth;
    int delta = 4;

    int palette() const { return 2 * delta - 1; }
};

std::string variant_name(Variant v);
/// Accepts high-girth, subcubic-girth41, mad-based, subcubic-mad.
Variant parse_variant(const std::string& name);
/// Throws std::invalid_argument when delta does not suit the variant.
void validate_mode(const AlgorithmMode& mode);

struct Measurement {
    std::string name;
    std::string value;
    std::string requirement;
    bool ok = false;
};

struct PreconditionReport {
    std::vector<Measurement> checks;
    bool ok() const;
    /// First failing measurement as "name = value, needs requirement".
    std::string first_violation() const;
};

PreconditionReport check_preconditions(const SimpleGraph& g, const AlgorithmMode& mode);

enum class StepKind { star_base, exact_base, cycle, cycle_caterpillar, pendant, caterpillar };

std::string step_kind_name(StepKind k);
StepKind parse_step_kind(const std::string& name);

/// One applied step: the colors it assigned, in application order.
///   star_base          vertices = center, leaves
///   exact_base         vertices = non-isolated vertices of the base graph
///   cycle              vertices = cycle in order
///   cycle_caterpillar  vertices = cycle in order, parameter = d of O_d
///   pendant            vertices = x, z
///   caterpillar        vertices = spine u_0..u_{ℓ+1}, parameter = κ
struct ReductionStep {
    StepKind kind = StepKind::exact_base;
    int parameter = 0;
    std::vector<Vertex> vertices;
    std::vector<std::pair<Edge, int>> colors;

    friend bool operator==(const ReductionStep&, const ReductionStep&) = default;
};

struct ReductionTrace {
    int palette = 0;
    std::vector<ReductionStep> steps;

    friend bool operator==(const ReductionTrace&, const ReductionTrace&) = default;
};

struct ReductionFailure {
    std::string reason;
    SimpleGraph stuck;
};

struct SparseResult {
    std::optional<StrongColoring> coloring;
    ReductionTrace trace;
    std::optional<ReductionFailure> failure;
    PreconditionReport preconditions;
};

/// Colors g with at most 2Δ-1 colors by reducing stars, cycles, pendant
/// edges and long caterpillars down to small remnants solved exactly.
/// Throws std::invalid_argument if Δ(g) exceeds mode.delta, or if `strict`
/// is set and some precondition measurement fails.
SparseResult strong_color_sparse(const SimpleGraph& g, const AlgorithmMode& mode, bool strict = false,
                                 std::int64_t budget = kDefaultSolverBudget);

/// Applies the steps in order, recomputing every step except exact_base from
/// the edges colored so far. Throws std::runtime_error when a step disagrees
/// with its recorded colors.
StrongColoring replay_trace(const SimpleGraph& g, const ReductionTrace& trace);

/// `trace K=<palette> steps=<count>`, then one line per step:
/// `step <kind> k=<parameter> vertices=a,b,c edges=u-v:c;u-v:c`
void write_trace(std::ostream& out, const ReductionTrace& trace);
/// Reads `step` lines and skips everything else; the palette comes from a
/// `trace K=` or `coloring K=` header.
ReductionTrace read_trace(std::istream& in);

}  // namespace oddcolor
