#pragma once

#include "kummerlab/rational.hpp"

#include <nlohmann/json_fwd.hpp>
#include <optional>
#include <string>
#include <vector>

namespace kummerlab::configs {

// A point where valency >= 3 lines of the configuration concur. Double points
// are never stored; they are derived (the invariant formulas only need delta
// and the v >= 3 incidence table).
struct MultiplePoint {
    int valency = 0;
    std::vector<int> lines; // indices of the incident lines, size() == valency
};

struct LineConfiguration {
    int r = 0; // number of lines
    std::vector<MultiplePoint> points;
    // realizability is metadata only: all invariant arithmetic below is
    // characteristic-independent. nullopt = realizable over C.
    std::optional<int> char_p;
    std::string name; // catalog name when builtin, empty otherwise
};

struct ConfigStats {
    int r = 0;      // lines
    int k = 0;      // multiple points
    long long v = 0; // sum of valencies
    long long delta = 0; // residual double points
};

ConfigStats stats(const LineConfiguration& c);

// catalog: general_position(r), complete_quadrangle, fano_char2, hesse, dual_hesse
LineConfiguration builtin(const std::string& name);
std::vector<std::string> builtin_names();

// list of violated invariants; empty means valid
std::vector<std::string> validate(const LineConfiguration& c);
void require_valid(const LineConfiguration& c);

nlohmann::ordered_json to_json(const LineConfiguration& c);
LineConfiguration config_from_json(const nlohmann::json& j);

} // namespace kummerlab::configs
