#include "kummerlab/configs.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace kummerlab::configs {

ConfigStats stats(const LineConfiguration& c) {
    ConfigStats s;
    s.r = c.r;
    s.k = static_cast<int>(c.points.size());
    long long pairs_at_points = 0;
    for (const auto& p : c.points) {
        s.v += p.valency;
        pairs_at_points += static_cast<long long>(p.valency) * (p.valency - 1) / 2;
    }
    s.delta = static_cast<long long>(c.r) * (c.r - 1) / 2 - pairs_at_points;
    return s;
}

namespace {

LineConfiguration general_position(int r) {
    if (r < 3) throw std::invalid_argument("general_position needs r >= 3");
    LineConfiguration c;
    c.r = r;
    c.name = "general_position(" + std::to_string(r) + ")";
    return c;
}

LineConfiguration complete_quadrangle() {
    // six lines through pairs of four general points; line order
    // L12,L13,L14,L23,L24,L34
    LineConfiguration c;
    c.r = 6;
    c.name = "complete_quadrangle";
    c.points = {
        {3, {0, 1, 2}}, // through P1
        {3, {0, 3, 4}}, // P2
        {3, {1, 3, 5}}, // P3
        {3, {2, 4, 5}}, // P4
    };
    return c;
}

// the twelve collinear triples of the 3x3 affine plane, cells numbered row-major
const std::vector<std::vector<int>>& ag23_lines() {
    static const std::vector<std::vector<int>> lines = {
        {0, 1, 2}, {3, 4, 5}, {6, 7, 8},      // rows
        {0, 3, 6}, {1, 4, 7}, {2, 5, 8},      // columns
        {0, 4, 8}, {1, 5, 6}, {2, 3, 7},      // one diagonal slope
        {2, 4, 6}, {0, 5, 7}, {1, 3, 8},      // the other
    };
    return lines;
}

LineConfiguration fano_char2() {
    // 7_3 7_3: seven lines through seven points, each triple; only realizable
    // over characteristic 2
    LineConfiguration c;
    c.r = 7;
    c.name = "fano_char2";
    c.char_p = 2;
    c.points = {
        {3, {0, 1, 2}}, {3, {0, 3, 4}}, {3, {0, 5, 6}}, {3, {1, 3, 5}},
        {3, {1, 4, 6}}, {3, {2, 3, 6}}, {3, {2, 4, 5}},
    };
    return c;
}

LineConfiguration hesse() {
    // type (9_4, 12_3): twelve lines joining the nine flexes of a cubic; the
    // nine flexes have valency 4, the twelve triangle vertices are plain double
    // points and stay derived
    LineConfiguration c;
    c.r = 12;
    c.name = "hesse";
    const auto& lines = ag23_lines(); // line i contains the cells of triple i
    for (int cell = 0; cell < 9; ++cell) {
        MultiplePoint p;
        for (int li = 0; li < 12; ++li)
            if (std::count(lines[li].begin(), lines[li].end(), cell)) p.lines.push_back(li);
        p.valency = static_cast<int>(p.lines.size());
        c.points.push_back(std::move(p));
    }
    return c;
}

LineConfiguration dual_hesse() {
    // type (12_3, 9_4): nine lines dual to the flexpoints, twelve triple points
    LineConfiguration c;
    c.r = 9;
    c.name = "dual_hesse";
    for (const auto& t : ag23_lines()) c.points.push_back({3, t});
    return c;
}

} // namespace

LineConfiguration builtin(const std::string& name) {
    if (name == "complete_quadrangle") return complete_quadrangle();
    if (name == "fano_char2") return fano_char2();
    if (name == "hesse") return hesse();
    if (name == "dual_hesse") return dual_hesse();
    if (name.rfind("general_position(", 0) == 0 && name.back() == ')') {
        int r = std::stoi(name.substr(17, name.size() - 18));
        return general_position(r);
    }
    throw std::invalid_argument("unknown configuration '" + name +
                                "' (try catalog list)");
}

std::vector<std::string> builtin_names() {
    return {"general_position(r)", "complete_quadrangle", "fano_char2", "hesse", "dual_hesse"};
}

std::vector<std::string> validate(const LineConfiguration& c) {
    std::vector<std::string> bad;
    if (c.r < 3) bad.push_back("line count must be >= 3");
    for (std::size_t i = 0; i < c.points.size(); ++i) {
        const auto& p = c.points[i];
        const std::string tag = "point " + std::to_string(i);
        if (p.valency < 3) bad.push_back(tag + ": valency " + std::to_string(p.valency) +
                                         " < 3 (double points are derived, not stored)");
        std::set<int> distinct(p.lines.begin(), p.lines.end());
        if (static_cast<int>(p.lines.size()) != p.valency ||
            distinct.size() != p.lines.size())
            bad.push_back(tag + ": incident line set must have exactly 'valency' distinct members");
        for (int li : p.lines)
            if (li < 0 || li >= c.r) bad.push_back(tag + ": line index " + std::to_string(li) + " out of range");
    }
    // two distinct points lie on at most one common line
    for (std::size_t i = 0; i < c.points.size(); ++i)
        for (std::size_t j = i + 1; j < c.points.size(); ++j) {
            std::set<int> a(c.points[i].lines.begin(), c.points[i].lines.end());
            int common = 0;
            for (int li : c.points[j].lines) common += a.count(li);
            if (common > 1)
                bad.push_back("points " + std::to_string(i) + "," + std::to_string(j) +
                              " share " + std::to_string(common) + " lines");
        }
    auto s = stats(c);
    if (s.delta < 0) bad.push_back("derived double-point count is negative");
    // each line meets the other r-1 exactly once, so the meetings consumed at
    // its multiple points cannot exceed r-1
    std::map<int, long long> consumed;
    for (const auto& p : c.points)
        for (int li : p.lines) consumed[li] += p.valency - 1;
    for (const auto& [li, used] : consumed)
        if (used > c.r - 1)
            bad.push_back("line " + std::to_string(li) + " would meet " + std::to_string(used) +
                          " lines at its multiple points but only " + std::to_string(c.r - 1) + " exist");
    return bad;
}

void require_valid(const LineConfiguration& c) {
    auto bad = validate(c);
    if (!bad.empty()) {
        std::string msg = "invalid configuration:";
        for (const auto& b : bad) msg += "\n  - " + b;
        throw std::invalid_argument(msg);
    }
}

nlohmann::ordered_json to_json(const LineConfiguration& c) {
    nlohmann::ordered_json j;
    j["lines"] = c.r;
    j["points"] = nlohmann::json::array();
    for (const auto& p : c.points)
        j["points"].push_back(nlohmann::ordered_json{{"valency", p.valency}, {"lines", p.lines}});
    if (c.char_p)
        j["realizability"] = nlohmann::ordered_json{{"char", *c.char_p}};
    else
        j["realizability"] = "complex";
    if (!c.name.empty()) j["name"] = c.name;
    return j;
}

LineConfiguration config_from_json(const nlohmann::json& j) {
    LineConfiguration c;
    c.r = j.at("lines").get<int>();
    if (j.contains("points"))
        for (const auto& pj : j.at("points")) {
            MultiplePoint p;
            p.valency = pj.at("valency").get<int>();
            p.lines = pj.at("lines").get<std::vector<int>>();
            c.points.push_back(std::move(p));
        }
    if (j.contains("realizability") && j.at("realizability").is_object())
        c.char_p = j.at("realizability").at("char").get<int>();
    if (j.contains("name")) c.name = j.at("name").get<std::string>();
    return c;
}

} // namespace kummerlab::configs
