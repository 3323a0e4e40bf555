#include <algorithm>
#include <map>
#include <stdexcept>

#include "oddcolor/odd_graph.hpp"

namespace oddcolor {

namespace {

// A template token names an element by its role against the endpoint pair:
// x = shared, y = start only, z = end only, s = spare. Indices follow the
// convention x_1..x_k, y_{k+1}..y_{n-1}, z_{k+1}..z_{n-1}, s_1..s_{k+1}.
struct Role {
    char cls;
    int index;
    friend auto operator<=>(const Role&, const Role&) = default;
};

using Template = std::vector<Role>;

Role x(int i) { return {'x', i}; }
Role y(int i) { return {'y', i}; }
Role z(int i) { return {'z', i}; }
Role s(int i) { return {'s', i}; }

void pair(Template& t, Role a, Role b) {
    t.push_back(a);
    t.push_back(b);
}

// ---- O_n, n >= 4, length 2n -------------------------------------------------

// λ1 = z_{k+1}, λ2 = y_{n-1}
Template zy_template(int n, int k) {
    Template t;
    if (k <= n - 4) {
        for (int i = k + 1; i <= n - 3; ++i) pair(t, z(i), y(i));
        pair(t, s(1), y(n - 2));
        for (int i = 2; i <= k + 1; ++i) pair(t, s(i), s(i - 1));
        pair(t, z(n - 2), s(k + 1));
        pair(t, z(n - 1), y(n - 1));
    } else if (k == n - 3) {
        pair(t, z(n - 2), x(1));
        pair(t, s(1), y(n - 2));
        for (int i = 2; i <= k; ++i) pair(t, s(i), s(i - 1));
        pair(t, x(1), s(k));
        pair(t, z(n - 1), y(n - 1));
    } else {  // k == n - 2
        pair(t, z(n - 1), y(n - 1));
        pair(t, s(1), x(1));
        for (int i = 2; i <= n - 3; ++i) pair(t, s(i), s(i - 1));
        pair(t, y(n - 1), s(n - 3));
        pair(t, x(1), y(n - 1));
    }
    return t;
}

// λ1 = z_{k+1}, λ2 = s_{k+1}
Template zs_template(int n, int k) {
    Template t;
    if (k == n - 2) {
        // The general pattern degenerates here (its z-run is empty and the walk
        // would start with s_1); this sequence keeps z_{n-1} first.
        pair(t, z(n - 1), x(1));
        pair(t, s(1), y(n - 1));
        Role prev = s(1);
        for (int i = 3; i <= n - 1; ++i) {
            pair(t, s(i), prev);
            prev = s(i);
        }
        pair(t, x(1), s(n - 1));
        return t;
    }
    for (int i = k + 1; i <= n - 2; ++i) pair(t, z(i), y(i));
    pair(t, s(1), y(n - 1));
    for (int i = 2; i <= k + 1; ++i) pair(t, s(i), s(i - 1));
    pair(t, z(n - 1), s(k + 1));
    return t;
}

// λ1 = λ2 = s_1
Template ss_equal_template(int n, int k) {
    Template t;
    if (k == 0) {
        pair(t, s(1), y(1));
        for (int i = 2; i <= n - 1; ++i) pair(t, z(i), y(i));
        pair(t, z(1), s(1));
    } else if (k == 1) {
        pair(t, s(1), x(1));
        for (int i = 2; i <= n - 1; ++i) pair(t, z(i), y(i));
        pair(t, x(1), s(1));
    } else if (k == 2) {
        pair(t, s(1), x(1));
        pair(t, s(3), y(3));
        pair(t, z(3), s(3));
        for (int i = 4; i <= n - 1; ++i) pair(t, z(i), y(i));
        pair(t, x(1), s(1));
    } else if (k <= n - 2) {
        pair(t, s(1), x(1));
        pair(t, s(3), y(k + 1));
        for (int i = 4; i <= k + 1; ++i) pair(t, s(i), s(i - 1));
        pair(t, z(k + 1), s(k + 1));
        for (int i = k + 2; i <= n - 1; ++i) pair(t, z(i), y(i));
        pair(t, x(1), s(1));
    } else {  // k == n - 1: the two s_1 tokens stand alone at the ends
        t.push_back(s(1));
        pair(t, x(2), s(2));
        for (int i = 3; i <= k; ++i) pair(t, x(i), x(i - 1));
        pair(t, s(2), x(k));
        t.push_back(s(1));
    }
    return t;
}

// λ1 = s_1 (s_2 when k = n-1), λ2 = s_{k+1}
Template ss_distinct_template(int n, int k) {
    Template t;
    if (k == 1) {
        pair(t, s(1), y(2));
        pair(t, s(2), s(1));
        for (int i = 3; i <= n - 1; ++i) pair(t, z(i), y(i));
        pair(t, z(2), s(2));
    } else if (k == 2) {
        pair(t, s(1), y(3));
        pair(t, s(2), s(1));
        pair(t, s(3), s(2));
        for (int i = 4; i <= n - 1; ++i) pair(t, z(i), y(i));
        pair(t, z(3), s(3));
    } else if (k <= n - 2) {
        pair(t, s(1), y(k + 1));
        for (int i = 2; i <= k + 1; ++i) pair(t, s(i), s(i - 1));
        for (int i = k + 2; i <= n - 1; ++i) pair(t, z(i), y(i));
        pair(t, z(k + 1), s(k + 1));
    } else {  // k == n - 1
        pair(t, s(2), x(2));
        for (int i = 3; i <= k + 1; ++i) pair(t, s(i), s(i - 1));
        pair(t, x(2), s(k + 1));
    }
    return t;
}

// ---- O_3, length 9 ----------------------------------------------------------

Template parse3(std::initializer_list<const char*> tokens) {
    Template t;
    for (const char* tok : tokens) t.push_back({tok[0], tok[1] - '0'});
    return t;
}

enum class Kind { z_y, z_s, s_s_equal, s_s_distinct };

Template petersen_template(int k, Kind kind) {
    switch (k) {
        case 0:
            if (kind == Kind::z_y) return parse3({"z1", "y1", "z2", "y2", "s1", "z1", "y2", "z2", "y1"});
            if (kind == Kind::z_s) return parse3({"z1", "y1", "z2", "y2", "y1", "z1", "y2", "z2", "s1"});
            return parse3({"s1", "y1", "z2", "y2", "y1", "s1", "y2", "z2", "s1"});
        case 1:
            if (kind == Kind::z_y) return parse3({"z2", "x1", "s2", "z2", "x1", "y2", "s1", "x1", "y2"});
            if (kind == Kind::z_s) return parse3({"z2", "y2", "s2", "x1", "y2", "s2", "s1", "z2", "s2"});
            if (kind == Kind::s_s_distinct) return parse3({"s1", "x1", "s2", "s1", "x1", "s2", "s1", "x1", "s2"});
            return parse3({"s1", "x1", "z2", "y2", "s2", "s1", "y2", "z2", "s1"});
        default:
            if (kind == Kind::s_s_distinct) return parse3({"s1", "x1", "s3", "x2", "x1", "s3", "s2", "x1", "s3"});
            return parse3({"s3", "x1", "s2", "x2", "x1", "s3", "s1", "x1", "s3"});
    }
}

// ---- role assignment --------------------------------------------------------

std::vector<int> realize(const Template& t, const PairPartition& p, int first, int last) {
    const int k = p.overlap();
    struct ClassInfo {
        const std::vector<int>* elements;
        int lo;
    };
    const std::map<char, ClassInfo> classes = {
        {'x', {&p.shared, 1}}, {'y', {&p.start_only, k + 1}}, {'z', {&p.end_only, k + 1}}, {'s', {&p.spare, 1}}};

    std::map<Role, int> assigned;
    auto pin = [&](Role r, int element) {
        const auto& elems = *classes.at(r.cls).elements;
        if (std::find(elems.begin(), elems.end(), element) == elems.end())
            throw std::logic_error("walk template pins an element to the wrong role class");
        auto [it, fresh] = assigned.emplace(r, element);
        if (!fresh && it->second != element) throw std::logic_error("walk template pins one role twice");
    };
    pin(t.front(), first);
    pin(t.back(), last);

    for (const auto& [cls, info] : classes) {
        std::vector<int> free_elements;
        for (int e : *info.elements) {
            bool taken = false;
            for (const auto& [role, el] : assigned) taken |= (role.cls == cls && el == e);
            if (!taken) free_elements.push_back(e);
        }
        auto next = free_elements.begin();
        const int count = static_cast<int>(info.elements->size());
        for (int idx = info.lo; idx < info.lo + count; ++idx) {
            if (assigned.count({cls, idx})) continue;
            assigned[{cls, idx}] = *next++;
        }
    }

    std::vector<int> labels;
    labels.reserve(t.size());
    for (const Role& r : t) {
        auto it = assigned.find(r);
        if (it == assigned.end()) throw std::logic_error("walk template refers to a missing role");
        labels.push_back(it->second);
    }
    return labels;
}

bool member(const std::vector<int>& v, int e) { return std::find(v.begin(), v.end(), e) != v.end(); }

// Labels of a base-length walk (2n for n >= 4, 9 for n = 3).
std::vector<int> base_labels(const SubsetVertex& start, const SubsetVertex& end, int first, int last) {
    const int n = start.n;
    const PairPartition p = classify_pair(start, end);
    const int k = p.overlap();
    const bool first_in_z = member(p.end_only, first);
    const bool last_in_y = member(p.start_only, last);

    if (!first_in_z && last_in_y) {
        // (s, y) is the reverse of (z, s)
        auto labels = base_labels(end, start, last, first);
        std::reverse(labels.begin(), labels.end());
        return labels;
    }

    Template t;
    if (n == 3) {
        Kind kind = first_in_z ? (last_in_y ? Kind::z_y : Kind::z_s)
                               : (first == last ? Kind::s_s_equal : Kind::s_s_distinct);
        t = petersen_template(k, kind);
    } else if (first_in_z) {
        t = last_in_y ? zy_template(n, k) : zs_template(n, k);
    } else {
        t = first == last ? ss_equal_template(n, k) : ss_distinct_template(n, k);
    }
    return realize(t, p, first, last);
}

void check_request(const WalkRequest& req) {
    if (req.start.n != req.end.n) throw std::invalid_argument("walk endpoints from different odd graphs");
    if (req.start.n < 3) throw std::invalid_argument("walk construction needs n >= 3");
    if (req.first_label < 1 || req.first_label > req.start.ground_size() || req.start.contains(req.first_label))
        throw std::invalid_argument("first label must lie outside the start vertex");
    if (req.last_label < 1 || req.last_label > req.end.ground_size() || req.end.contains(req.last_label))
        throw std::invalid_argument("last label must lie outside the end vertex");
}

}  // namespace

int prescribed_threshold(int n) { return n == 3 ? 9 : 2 * n; }
int avoiding_threshold(int n) { return n == 3 ? 7 : 2 * n - 2; }

SpecialWalk construct_prescribed_walk(const WalkRequest& req) {
    check_request(req);
    const int n = req.start.n;
    const int base = prescribed_threshold(n);
    if (req.length < base)
        throw std::invalid_argument("length " + std::to_string(req.length) + " below the guaranteed threshold " +
                                    std::to_string(base) + " for O_" + std::to_string(n));

    // Peel edges off the end until the base length remains: the last edge
    // enters `end` from u = neighbor(end, λ2); the shorter walk must reach u
    // with a label other than λ2, so the smallest admissible one is used.
    std::vector<int> tail;
    SubsetVertex target = req.end;
    int last = req.last_label;
    for (int len = req.length; len > base; --len) {
        tail.push_back(last);
        const SubsetVertex u = neighbor_via_label(target, last);
        int mu = 0;
        for (int e : u.missing())
            if (e != last) {
                mu = e;
                break;
            }
        target = u;
        last = mu;
    }
    std::vector<int> labels = base_labels(req.start, target, req.first_label, last);
    labels.insert(labels.end(), tail.rbegin(), tail.rend());

    SpecialWalk w = walk_from_labels(req.start, labels);
    if (w.end() != req.end || w.labels.front() != req.first_label || w.labels.back() != req.last_label ||
        w.length() != req.length)
        throw std::logic_error("walk template produced the wrong endpoint or boundary labels");
    return w;
}

SpecialWalk construct_avoiding_walk(const WalkRequest& req) {
    check_request(req);
    const int n = req.start.n;
    if (req.length < avoiding_threshold(n))
        throw std::invalid_argument("length " + std::to_string(req.length) + " below the guaranteed threshold " +
                                    std::to_string(avoiding_threshold(n)) + " for avoiding walks in O_" +
                                    std::to_string(n));
    WalkRequest outer;
    outer.start = neighbor_via_label(req.start, req.first_label);
    outer.end = neighbor_via_label(req.end, req.last_label);
    outer.first_label = req.first_label;
    outer.last_label = req.last_label;
    outer.length = req.length + 2;
    SpecialWalk full = construct_prescribed_walk(outer);

    SpecialWalk w;
    w.n = n;
    w.vertices.assign(full.vertices.begin() + 1, full.vertices.end() - 1);
    w.labels.assign(full.labels.begin() + 1, full.labels.end() - 1);
    if (w.start() != req.start || w.end() != req.end || w.labels.front() == req.first_label ||
        w.labels.back() == req.last_label)
        throw std::logic_error("avoiding walk construction failed");
    return w;
}

}  // namespace oddcolor
