#include "oddcolor/odd_graph.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace oddcolor {

namespace {

std::vector<int> bits_to_elements(std::uint32_t mask) {
    std::vector<int> out;
    for (int e = 1; mask != 0; ++e, mask >>= 1)
        if (mask & 1U) out.push_back(e);
    return out;
}

void check_parameter(int n) {
    if (n < 2 || n > kMaxOddParameter) throw std::invalid_argument("odd graph parameter out of range");
}

void check_vertex(const SubsetVertex& v) {
    check_parameter(v.n);
    if ((v.members & ~v.ground_mask()) != 0 || std::popcount(v.members) != v.n - 1)
        throw std::invalid_argument("not a vertex of O_" + std::to_string(v.n) + ": {" + v.to_string() + "}");
}

}  // namespace

SubsetVertex SubsetVertex::from_elements(int n, std::span<const int> elements) {
    check_parameter(n);
    SubsetVertex v{n, 0};
    for (int e : elements) {
        if (e < 1 || e > 2 * n - 1) throw std::invalid_argument("element " + std::to_string(e) + " outside ground set");
        if (v.contains(e)) throw std::invalid_argument("repeated element " + std::to_string(e));
        v.members |= std::uint32_t{1} << (e - 1);
    }
    check_vertex(v);
    return v;
}

SubsetVertex SubsetVertex::from_elements(int n, std::initializer_list<int> elements) {
    return from_elements(n, std::span<const int>(elements.begin(), elements.size()));
}

std::vector<int> SubsetVertex::elements() const { return bits_to_elements(members); }

std::vector<int> SubsetVertex::missing() const { return bits_to_elements(ground_mask() & ~members); }

std::string SubsetVertex::to_string() const {
    std::string out;
    for (int e : elements()) {
        if (!out.empty()) out += ',';
        out += std::to_string(e);
    }
    return out;
}

SubsetVertex parse_subset(int n, const std::string& text) {
    std::vector<int> elements;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            elements.push_back(std::stoi(item, &used));
            if (used != item.size()) throw std::invalid_argument("junk");
        } catch (const std::exception&) {
            throw std::invalid_argument("bad subset element '" + item + "'");
        }
    }
    return SubsetVertex::from_elements(n, elements);
}

int OddGraph::index_of(const SubsetVertex& v) const {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), v,
                               [](const SubsetVertex& a, const SubsetVertex& b) { return a.members < b.members; });
    if (it == vertices.end() || *it != v) throw std::invalid_argument("vertex not in odd graph");
    return static_cast<int>(it - vertices.begin());
}

OddGraph odd_graph(int n, int cap) {
    if (n < 3) throw std::invalid_argument("odd graph needs n >= 3");
    if (n > cap) throw std::invalid_argument("odd graph O_" + std::to_string(n) + " exceeds size cap n <= " +
                                             std::to_string(cap));
    OddGraph og;
    og.n = n;
    const std::uint32_t limit = std::uint32_t{1} << (2 * n - 1);
    for (std::uint32_t mask = 0; mask < limit; ++mask)
        if (std::popcount(mask) == n - 1) og.vertices.push_back(SubsetVertex{n, mask});
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < og.vertices.size(); ++i)
        for (std::size_t j = i + 1; j < og.vertices.size(); ++j)
            if ((og.vertices[i].members & og.vertices[j].members) == 0)
                edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    og.graph = build_graph(static_cast<int>(og.vertices.size()), edges);
    return og;
}

int edge_label(const SubsetVertex& u, const SubsetVertex& v) {
    check_vertex(u);
    check_vertex(v);
    if (u.n != v.n) throw std::invalid_argument("vertices from different odd graphs");
    if ((u.members & v.members) != 0)
        throw std::invalid_argument("{" + u.to_string() + "} and {" + v.to_string() + "} are not adjacent");
    std::uint32_t rest = u.ground_mask() & ~(u.members | v.members);
    return std::countr_zero(rest) + 1;
}

SubsetVertex neighbor_via_label(const SubsetVertex& w, int label) {
    check_vertex(w);
    if (label < 1 || label > w.ground_size()) throw std::invalid_argument("label outside ground set");
    if (w.contains(label))
        throw std::invalid_argument("label " + std::to_string(label) + " belongs to {" + w.to_string() + "}");
    return SubsetVertex{w.n, w.ground_mask() & ~(w.members | (std::uint32_t{1} << (label - 1)))};
}

std::optional<std::string> walk_defect(const SpecialWalk& w) {
    if (w.vertices.size() != w.labels.size() + 1) return "vertex count must be label count + 1";
    for (const auto& v : w.vertices) {
        if (v.n != w.n) return "vertex from a different odd graph";
        try {
            check_vertex(v);
        } catch (const std::invalid_argument& e) {
            return e.what();
        }
    }
    for (std::size_t i = 0; i < w.labels.size(); ++i) {
        const auto& a = w.vertices[i];
        const auto& b = w.vertices[i + 1];
        if ((a.members & b.members) != 0) return "step " + std::to_string(i) + " joins non-adjacent vertices";
        if (edge_label(a, b) != w.labels[i]) return "step " + std::to_string(i) + " carries the wrong label";
        if (i > 0 && w.labels[i] == w.labels[i - 1]) return "step " + std::to_string(i) + " backtracks";
    }
    if (w.closed) {
        if (w.vertices.front() != w.vertices.back()) return "closed walk does not return to its start";
        if (w.labels.size() >= 2 && w.labels.front() == w.labels.back()) return "closed walk backtracks at the wrap";
        if (w.labels.size() == 1) return "closed walk of length 1";
    }
    return std::nullopt;
}

SpecialWalk walk_from_labels(const SubsetVertex& start, std::span<const int> labels) {
    check_vertex(start);
    SpecialWalk w;
    w.n = start.n;
    w.vertices.push_back(start);
    for (std::size_t i = 0; i < labels.size(); ++i) {
        const int label = labels[i];
        if (i > 0 && label == labels[i - 1])
            throw std::invalid_argument("label " + std::to_string(label) + " repeated at step " + std::to_string(i) +
                                        " (backtracking)");
        w.vertices.push_back(neighbor_via_label(w.vertices.back(), label));
        w.labels.push_back(label);
        if (i > 0) {
            // two steps with labels x then y swap y out for x
            const std::uint32_t x = std::uint32_t{1} << (labels[i - 1] - 1);
            const std::uint32_t y = std::uint32_t{1} << (label - 1);
            const auto& before = w.vertices[w.vertices.size() - 3];
            if (w.vertices.back().members != ((before.members & ~y) | x))
                throw std::logic_error("two-step replacement rule violated");
        }
    }
    return w;
}

SpecialWalk reversed(const SpecialWalk& w) {
    SpecialWalk r = w;
    std::reverse(r.vertices.begin(), r.vertices.end());
    std::reverse(r.labels.begin(), r.labels.end());
    return r;
}

PairPartition classify_pair(const SubsetVertex& w0, const SubsetVertex& wend) {
    check_vertex(w0);
    check_vertex(wend);
    if (w0.n != wend.n) throw std::invalid_argument("vertices from different odd graphs");
    PairPartition p;
    p.shared = bits_to_elements(w0.members & wend.members);
    p.start_only = bits_to_elements(w0.members & ~wend.members);
    p.end_only = bits_to_elements(wend.members & ~w0.members);
    p.spare = bits_to_elements(w0.ground_mask() & ~(w0.members | wend.members));
    return p;
}

int shortest_even_distance(const SubsetVertex& u, const SubsetVertex& v) {
    check_vertex(u);
    check_vertex(v);
    if (u.n != v.n) throw std::invalid_argument("vertices from different odd graphs");
    return 2 * std::popcount(u.members & ~v.members);
}

SpecialWalk six_cycle_through(std::span<const SubsetVertex, 4> path) {
    const int n = path[0].n;
    for (const auto& v : path) {
        check_vertex(v);
        if (v.n != n) throw std::invalid_argument("vertices from different odd graphs");
    }
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j)
            if (path[i] == path[j]) throw std::invalid_argument("not a 3-path: repeated vertex");
    for (std::size_t i = 0; i + 1 < 4; ++i)
        if ((path[i].members & path[i + 1].members) != 0)
            throw std::invalid_argument("not a 3-path: consecutive vertices not adjacent");

    // [v1] = X + x1, [v3] = X + x2, and v4 leaves out x3 = label(v3 v4).
    const std::uint32_t ground = path[0].ground_mask();
    const std::uint32_t shared = path[0].members & path[2].members;
    const std::uint32_t x1 = path[0].members & ~path[2].members;
    const std::uint32_t x3 = std::uint32_t{1} << (edge_label(path[2], path[3]) - 1);
    const SubsetVertex v5{n, shared | x3};
    const SubsetVertex v6{n, ground & ~(shared | x1 | x3)};

    SpecialWalk w;
    w.n = n;
    w.closed = true;
    w.vertices = {path[0], path[1], path[2], path[3], v5, v6, path[0]};
    for (std::size_t i = 0; i + 1 < w.vertices.size(); ++i) w.labels.push_back(edge_label(w.vertices[i], w.vertices[i + 1]));
    if (auto defect = walk_defect(w)) throw std::logic_error("six-cycle construction failed: " + *defect);
    return w;
}

void write_walk(std::ostream& out, const SpecialWalk& w) {
    out << "oddwalk n=" << w.n << " len=" << w.length() << " closed=" << (w.closed ? 1 : 0) << '\n';
    for (std::size_t i = 0; i < w.vertices.size(); ++i) out << (i ? " " : "") << w.vertices[i].to_string();
    out << '\n';
    for (std::size_t i = 0; i < w.labels.size(); ++i) out << (i ? " " : "") << w.labels[i];
    out << '\n';
}

SpecialWalk read_walk(std::istream& in) {
    std::string header, vertex_line, label_line;
    if (!std::getline(in, header)) throw std::invalid_argument("walk: missing header");
    std::istringstream hs(header);
    std::string tag, n_tok, len_tok, closed_tok;
    hs >> tag >> n_tok >> len_tok >> closed_tok;
    auto value = [](const std::string& tok, const std::string& key) {
        if (tok.rfind(key + "=", 0) != 0) throw std::invalid_argument("walk: expected " + key + "=");
        return std::stoi(tok.substr(key.size() + 1));
    };
    if (tag != "oddwalk") throw std::invalid_argument("walk: header must start with 'oddwalk'");
    SpecialWalk w;
    w.n = value(n_tok, "n");
    const int len = value(len_tok, "len");
    const int closed = value(closed_tok, "closed");
    if (closed != 0 && closed != 1) throw std::invalid_argument("walk: closed must be 0 or 1");
    w.closed = closed == 1;
    std::getline(in, vertex_line);
    std::getline(in, label_line);
    std::istringstream vs(vertex_line), ls(label_line);
    std::string tok;
    while (vs >> tok) w.vertices.push_back(parse_subset(w.n, tok));
    int label = 0;
    while (ls >> label) w.labels.push_back(label);
    if (w.length() != len) throw std::invalid_argument("walk: label count disagrees with len");
    if (auto defect = walk_defect(w)) throw std::invalid_argument("walk: " + *defect);
    return w;
}

}  // namespace oddcolor
