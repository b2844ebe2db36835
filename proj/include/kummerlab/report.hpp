#pragma once

#include "kummerlab/covers.hpp"
#include "kummerlab/rational.hpp"

#include <nlohmann/json.hpp>
#include <string>
#include <vector>

namespace kummerlab::report {

using Json = nlohmann::ordered_json;

// Everything a command emits: echo of the invocation, parsed inputs, results,
// and notes saying which formula path produced each number. Round-trips
// losslessly through the JSON emitter.
struct Report {
    std::string command;
    Json inputs = Json::object();
    Json results = Json::object();
    std::vector<std::string> provenance;
};

Json to_json(const Report& r);
Report report_from_json(const Json& j);

enum class Format { md, json, csv };
Format parse_format(const std::string& s);

struct EmitOptions {
    Format format = Format::md;
    bool decimal = false; // adds a display-only approximation column (md/csv)
};

std::string emit(const Report& r, const EmitOptions& opt);

// rationals enter reports as exact "p/q" strings
Json rat_json(const Rat& r);
Json int_json(const Int& i);
Json invariants_json(const covers::ChernInvariants& inv);

} // namespace kummerlab::report
