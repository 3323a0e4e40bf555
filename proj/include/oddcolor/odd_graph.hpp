#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "oddcolor/graph.hpp"

namespace oddcolor {

/// Largest n for which O_n is materialized or searched exhaustively.
inline constexpr int kOddGraphCap = 7;
/// Largest n the bitmask representation supports.
inline constexpr int kMaxOddParameter = 16;

/// An (n-1)-subset of {1..2n-1}; element e is bit e-1 of `members`.
struct SubsetVertex {
    int n = 0;
    std::uint32_t members = 0;

    static SubsetVertex from_elements(int n, std::span<const int> elements);
    static SubsetVertex from_elements(int n, std::initializer_list<int> elements);

    int ground_size() const { return 2 * n - 1; }
    std::uint32_t ground_mask() const { return (std::uint32_t{1} << ground_size()) - 1; }
    bool contains(int element) const { return (members >> (element - 1)) & 1U; }
    std::vector<int> elements() const;
    /// Elements of the ground set missing from this vertex (n of them).
    std::vector<int> missing() const;
    /// "1,2,3"
    std::string to_string() const;

    friend bool operator==(const SubsetVertex&, const SubsetVertex&) = default;
};

/// Parses "1,2,3" as a vertex of O_n; throws std::invalid_argument.
SubsetVertex parse_subset(int n, const std::string& text);

struct OddGraph {
    int n = 0;
    std::vector<SubsetVertex> vertices;  // in increasing bitmask order
    SimpleGraph graph;

    int index_of(const SubsetVertex& v) const;
};

/// O_n for 3 <= n <= cap. Throws std::invalid_argument outside that range.
OddGraph odd_graph(int n, int cap = kOddGraphCap);

/// The unique element outside [u] ∪ [v]; throws if u and v are not adjacent.
int edge_label(const SubsetVertex& u, const SubsetVertex& v);
/// The neighbor reached from w along the edge labeled `label`.
SubsetVertex neighbor_via_label(const SubsetVertex& w, int label);

/// Walk in O_n; labels[i] is the label of vertices[i]vertices[i+1].
struct SpecialWalk {
    int n = 0;
    std::vector<SubsetVertex> vertices;
    std::vector<int> labels;
    bool closed = false;

    int length() const { return static_cast<int>(labels.size()); }
    SubsetVertex start() const { return vertices.front(); }
    SubsetVertex end() const { return vertices.back(); }
};

/// Description of the first broken invariant, or nullopt when the walk is a
/// valid special walk (cyclically non-backtracking when closed).
std::optional<std::string> walk_defect(const SpecialWalk& w);

/// Follows labels from `start`. Throws std::invalid_argument if a label lies in
/// the current vertex or repeats the previous one.
SpecialWalk walk_from_labels(const SubsetVertex& start, std::span<const int> labels);

/// Reverses vertex and label order.
SpecialWalk reversed(const SpecialWalk& w);

/// Ground set split against a pair of vertices, each class ascending.
struct PairPartition {
    std::vector<int> shared;      // [w0] ∩ [wend]
    std::vector<int> start_only;  // [w0] \ [wend]
    std::vector<int> end_only;    // [wend] \ [w0]
    std::vector<int> spare;       // outside both

    int overlap() const { return static_cast<int>(shared.size()); }
};

PairPartition classify_pair(const SubsetVertex& w0, const SubsetVertex& wend);

/// 2k where k = |[u] \ [v]|: the length of a shortest even u–v path.
int shortest_even_distance(const SubsetVertex& u, const SubsetVertex& v);

/// Closed 6-walk whose first three edges are the given 3-path.
SpecialWalk six_cycle_through(std::span<const SubsetVertex, 4> path);

enum class WalkMode { prescribed, avoiding };

struct WalkRequest {
    SubsetVertex start;
    SubsetVertex end;
    int first_label = 0;
    int last_label = 0;
    int length = 0;
    WalkMode mode = WalkMode::prescribed;
};

/// Shortest length at which every prescribed request in O_n is solvable.
int prescribed_threshold(int n);
/// Shortest length at which every avoiding request in O_n is solvable.
int avoiding_threshold(int n);

/// Walk of exactly req.length from start to end with the requested first and
/// last labels. Base lengths come from explicit label templates; longer
/// lengths peel one edge off the end at a time.
SpecialWalk construct_prescribed_walk(const WalkRequest& req);

/// Walk whose first label differs from req.first_label and last label from
/// req.last_label; obtained by stripping the ends of a prescribed walk of
/// length req.length + 2.
SpecialWalk construct_avoiding_walk(const WalkRequest& req);

/// Exact decision and reconstruction by dynamic programming over
/// (vertex, incoming label) states. Honors req.mode.
std::optional<SpecialWalk> dp_special_walk(const WalkRequest& req, int cap = kOddGraphCap);

/// Closed walk of the given length through w whose wrap-around pair of edges
/// is also distinct; nullopt when none exists.
std::optional<SpecialWalk> find_closed_special_walk(const SubsetVertex& w, int length, int cap = kOddGraphCap);

/// As find_closed_special_walk, restricted to (length even, >= 6) or
/// (length odd, >= 2n-1). Throws std::invalid_argument outside that range and
/// std::runtime_error if the search comes back empty.
SpecialWalk closed_special_walk(const SubsetVertex& w, int length);

struct SharpnessCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct SharpnessReport {
    int n = 0;
    std::vector<SharpnessCheck> checks;
    bool all_passed() const;
};

/// Exhaustive checks that the walk-length thresholds are attained and tight.
/// Supported for n in {3, 4}.
SharpnessReport sharpness_audit(int n);

/// Every valid (start, end, first label, last label) combination in O_n.
std::vector<WalkRequest> all_requests(int n, int length, WalkMode mode = WalkMode::prescribed);

void write_walk(std::ostream& out, const SpecialWalk& w);
/// Parses the three-line walk format and validates the result.
SpecialWalk read_walk(std::istream& in);

}  // namespace oddcolor
