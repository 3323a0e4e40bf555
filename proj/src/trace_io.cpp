#include <iostream>
#include <sstream>
#include <stdexcept>

#include "oddcolor/graph_io.hpp"
#include "oddcolor/reduction.hpp"

namespace oddcolor {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    if (text.empty()) return out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(item);
    return out;
}

int to_int(const std::string& text, int line_no) {
    try {
        std::size_t used = 0;
        int v = std::stoi(text, &used);
        if (used == text.size()) return v;
    } catch (const std::exception&) {
    }
    throw std::invalid_argument("trace line " + std::to_string(line_no) + ": bad number '" + text + "'");
}

std::string value_of(const std::string& token, const std::string& key, int line_no) {
    if (token.rfind(key + "=", 0) != 0)
        throw std::invalid_argument("trace line " + std::to_string(line_no) + ": expected " + key + "=");
    return token.substr(key.size() + 1);
}

}  // namespace

void write_trace(std::ostream& out, const ReductionTrace& trace) {
    out << "trace K=" << trace.palette << " steps=" << trace.steps.size() << '\n';
    for (const auto& step : trace.steps) {
        out << "step " << step_kind_name(step.kind) << " k=" << step.parameter << " vertices=";
        for (std::size_t i = 0; i < step.vertices.size(); ++i) out << (i ? "," : "") << step.vertices[i];
        out << " edges=";
        for (std::size_t i = 0; i < step.colors.size(); ++i)
            out << (i ? ";" : "") << step.colors[i].first.u << '-' << step.colors[i].first.v << ':' << step.colors[i].second;
        out << '\n';
    }
}

ReductionTrace read_trace(std::istream& in) {
    ReductionTrace trace;
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string line = strip_comment(raw);
        std::istringstream ss(line);
        std::string tag;
        ss >> tag;
        if (tag == "trace" || tag == "coloring") {
            std::string k;
            ss >> k;
            trace.palette = to_int(value_of(k, "K", line_no), line_no);
            continue;
        }
        if (tag != "step") continue;
        std::string kind, k, vertices, edges;
        ss >> kind >> k >> vertices >> edges;
        ReductionStep step;
        try {
            step.kind = parse_step_kind(kind);
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument("trace line " + std::to_string(line_no) + ": " + e.what());
        }
        step.parameter = to_int(value_of(k, "k", line_no), line_no);
        for (const auto& v : split(value_of(vertices, "vertices", line_no), ',')) step.vertices.push_back(to_int(v, line_no));
        for (const auto& item : split(value_of(edges, "edges", line_no), ';')) {
            const auto dash = item.find('-'), colon = item.find(':');
            if (dash == std::string::npos || colon == std::string::npos || colon < dash)
                throw std::invalid_argument("trace line " + std::to_string(line_no) + ": expected u-v:color");
            const int u = to_int(item.substr(0, dash), line_no);
            const int v = to_int(item.substr(dash + 1, colon - dash - 1), line_no);
            step.colors.emplace_back(Edge(u, v), to_int(item.substr(colon + 1), line_no));
        }
        trace.steps.push_back(std::move(step));
    }
    return trace;
}

}  // namespace oddcolor
