#include <bit>
#include <sstream>
#include <stdexcept>

#include "oddcolor/odd_graph.hpp"

namespace oddcolor {

namespace {

// Layered reachability over states (vertex bitmask, label of the edge used to
// enter it). A step may not reuse the entering label, which is exactly the
// non-backtracking condition since labels at a vertex are pairwise distinct.
std::optional<SpecialWalk> layered_search(const SubsetVertex& start, std::uint32_t first_allowed,
                                          const SubsetVertex& end, std::uint32_t last_allowed, int length) {
    const int n = start.n;
    const int g = 2 * n - 1;
    const std::uint32_t ground = start.ground_mask();
    const std::size_t states = (std::size_t{1} << g) * static_cast<std::size_t>(g);
    auto index = [g](std::uint32_t mask, int label) {
        return static_cast<std::size_t>(mask) * static_cast<std::size_t>(g) + static_cast<std::size_t>(label - 1);
    };
    auto step = [ground](std::uint32_t mask, int label) { return ground & ~(mask | (std::uint32_t{1} << (label - 1))); };

    std::vector<std::vector<std::size_t>> frontier(static_cast<std::size_t>(length) + 1);
    std::vector<std::vector<char>> reached(static_cast<std::size_t>(length) + 1);
    reached[1].assign(states, 0);
    for (int a = 1; a <= g; ++a) {
        if (!((first_allowed >> (a - 1)) & 1U) || start.contains(a)) continue;
        std::size_t id = index(step(start.members, a), a);
        reached[1][id] = 1;
        frontier[1].push_back(id);
    }
    for (int t = 2; t <= length; ++t) {
        reached[static_cast<std::size_t>(t)].assign(states, 0);
        for (std::size_t id : frontier[static_cast<std::size_t>(t) - 1]) {
            const auto mask = static_cast<std::uint32_t>(id / static_cast<std::size_t>(g));
            const int in_label = static_cast<int>(id % static_cast<std::size_t>(g)) + 1;
            for (int b = 1; b <= g; ++b) {
                if (b == in_label || ((mask >> (b - 1)) & 1U)) continue;
                std::size_t next = index(step(mask, b), b);
                if (!reached[static_cast<std::size_t>(t)][next]) {
                    reached[static_cast<std::size_t>(t)][next] = 1;
                    frontier[static_cast<std::size_t>(t)].push_back(next);
                }
            }
        }
    }

    int goal_label = 0;
    for (int a = 1; a <= g && goal_label == 0; ++a)
        if (((last_allowed >> (a - 1)) & 1U) && !end.contains(a) &&
            reached[static_cast<std::size_t>(length)][index(end.members, a)])
            goal_label = a;
    if (goal_label == 0) return std::nullopt;

    // Walk back, taking the smallest admissible predecessor label each time.
    std::vector<int> labels(static_cast<std::size_t>(length));
    std::uint32_t mask = end.members;
    int label = goal_label;
    for (int t = length; t >= 1; --t) {
        labels[static_cast<std::size_t>(t) - 1] = label;
        const std::uint32_t prev = step(mask, label);
        if (t == 1) break;
        int chosen = 0;
        for (int b = 1; b <= g && chosen == 0; ++b)
            if (b != label && !((prev >> (b - 1)) & 1U) && reached[static_cast<std::size_t>(t) - 1][index(prev, b)])
                chosen = b;
        if (chosen == 0) throw std::logic_error("walk search lost its predecessor chain");
        mask = prev;
        label = chosen;
    }
    SpecialWalk w = walk_from_labels(start, labels);
    if (w.end() != end) throw std::logic_error("walk search reconstructed the wrong endpoint");
    return w;
}

void check_searchable(const SubsetVertex& v, int cap) {
    if (v.n < 3) throw std::invalid_argument("walk search needs n >= 3");
    if (v.n > cap)
        throw std::invalid_argument("O_" + std::to_string(v.n) + " exceeds the search size cap n <= " +
                                    std::to_string(cap));
}

std::uint32_t bit(int label) { return std::uint32_t{1} << (label - 1); }

}  // namespace

std::optional<SpecialWalk> dp_special_walk(const WalkRequest& req, int cap) {
    check_searchable(req.start, cap);
    if (req.end.n != req.start.n) throw std::invalid_argument("walk endpoints from different odd graphs");
    if (req.length < 1) throw std::invalid_argument("walk length must be positive");
    const int g = req.start.ground_size();
    if (req.first_label < 1 || req.first_label > g || req.start.contains(req.first_label))
        throw std::invalid_argument("first label must lie outside the start vertex");
    if (req.last_label < 1 || req.last_label > g || req.end.contains(req.last_label))
        throw std::invalid_argument("last label must lie outside the end vertex");
    const std::uint32_t ground = req.start.ground_mask();
    if (req.mode == WalkMode::prescribed)
        return layered_search(req.start, bit(req.first_label), req.end, bit(req.last_label), req.length);
    return layered_search(req.start, ground & ~bit(req.first_label), req.end, ground & ~bit(req.last_label),
                          req.length);
}

std::optional<SpecialWalk> find_closed_special_walk(const SubsetVertex& w, int length, int cap) {
    check_searchable(w, cap);
    if (length < 1) throw std::invalid_argument("walk length must be positive");
    const std::uint32_t ground = w.ground_mask();
    for (int a : w.missing()) {
        if (auto found = layered_search(w, bit(a), w, ground & ~bit(a), length)) {
            found->closed = true;
            return found;
        }
    }
    return std::nullopt;
}

SpecialWalk closed_special_walk(const SubsetVertex& w, int length) {
    const bool even_ok = length % 2 == 0 && length >= 6;
    const bool odd_ok = length % 2 == 1 && length >= 2 * w.n - 1;
    if (!even_ok && !odd_ok)
        throw std::invalid_argument("closed special walks are guaranteed only for even length >= 6 or odd length >= " +
                                    std::to_string(2 * w.n - 1));
    auto found = find_closed_special_walk(w, length);
    if (!found) throw std::runtime_error("no closed special walk of length " + std::to_string(length) + " through {" +
                                         w.to_string() + "}");
    return *found;
}

std::vector<WalkRequest> all_requests(int n, int length, WalkMode mode) {
    const OddGraph og = odd_graph(n);
    std::vector<WalkRequest> out;
    for (const auto& a : og.vertices)
        for (const auto& b : og.vertices)
            for (int l1 : a.missing())
                for (int l2 : b.missing()) out.push_back({a, b, l1, l2, length, mode});
    return out;
}

bool SharpnessReport::all_passed() const {
    for (const auto& c : checks)
        if (!c.passed) return false;
    return !checks.empty();
}

namespace {

SharpnessCheck expect_none(const std::string& name, const WalkRequest& req) {
    SharpnessCheck c;
    c.name = name;
    auto found = dp_special_walk(req);
    c.passed = !found.has_value();
    std::ostringstream ss;
    const char* rel = req.mode == WalkMode::avoiding ? " != " : " ";
    ss << "{" << req.start.to_string() << "} -> {" << req.end.to_string() << "} first" << rel << req.first_label << " last"
       << rel << req.last_label << " len " << req.length << (c.passed ? ": no walk" : ": walk found");
    c.detail = ss.str();
    return c;
}

SharpnessCheck universality(int n, int length) {
    SharpnessCheck c;
    c.name = "length " + std::to_string(length) + " solvable for every request";
    int total = 0, feasible = 0, built = 0;
    for (const auto& req : all_requests(n, length)) {
        ++total;
        if (dp_special_walk(req)) ++feasible;
        try {
            SpecialWalk w = construct_prescribed_walk(req);
            if (!walk_defect(w) && w.end() == req.end && w.length() == length) ++built;
        } catch (const std::exception&) {
        }
    }
    c.passed = total > 0 && feasible == total && built == total;
    c.detail = std::to_string(total) + " requests, " + std::to_string(feasible) + " feasible by search, " +
               std::to_string(built) + " built";
    return c;
}

}  // namespace

SharpnessReport sharpness_audit(int n) {
    if (n != 3 && n != 4) throw std::invalid_argument("sharpness audit covers n = 3 and n = 4 only");
    SharpnessReport report;
    report.n = n;
    if (n == 3) {
        const auto a = SubsetVertex::from_elements(3, {1, 2});
        const auto b = SubsetVertex::from_elements(3, {3, 4});
        report.checks.push_back(expect_none("length 6 impossible", {a, a, 5, 5, 6, WalkMode::prescribed}));
        // the inner walk the length-6 case would need
        report.checks.push_back(expect_none("inner length 4 impossible", {b, b, 5, 5, 4, WalkMode::avoiding}));
        report.checks.push_back(expect_none("length 7 impossible", {a, a, 5, 3, 7, WalkMode::prescribed}));
        report.checks.push_back(expect_none("length 8 impossible", {a, b, 5, 5, 8, WalkMode::prescribed}));
        report.checks.push_back(universality(3, 9));
        return report;
    }
    const auto y = SubsetVertex::from_elements(4, {1, 2, 3});
    const auto z = SubsetVertex::from_elements(4, {4, 5, 6});
    // first edge labeled s_1 = 7: every even length below 8 fails, whatever the last label
    for (int len : {2, 4, 6}) {
        SharpnessCheck c;
        c.name = "even length " + std::to_string(len) + " impossible";
        c.passed = true;
        for (int l2 : z.missing()) {
            auto sub = expect_none(c.name, {y, z, 7, l2, len, WalkMode::prescribed});
            c.passed &= sub.passed;
        }
        c.detail = "{1,2,3} -> {4,5,6} first 7, every last label";
        report.checks.push_back(c);
    }
    // start = end, both boundary edges labeled s_1 = 4: every odd length below 9 fails
    for (int len : {1, 3, 5, 7})
        report.checks.push_back(
            expect_none("odd length " + std::to_string(len) + " impossible", {y, y, 4, 4, len, WalkMode::prescribed}));
    report.checks.push_back(universality(4, 8));
    return report;
}

}  // namespace oddcolor
