#include "kummerlab/report.hpp"

#include <cctype>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace kummerlab::report {

Json to_json(const Report& r) {
    Json j;
    j["command"] = r.command;
    j["inputs"] = r.inputs;
    j["results"] = r.results;
    j["provenance"] = r.provenance;
    return j;
}

Report report_from_json(const Json& j) {
    Report r;
    r.command = j.at("command").get<std::string>();
    r.inputs = j.at("inputs");
    r.results = j.at("results");
    for (const auto& p : j.at("provenance")) r.provenance.push_back(p.get<std::string>());
    return r;
}

Format parse_format(const std::string& s) {
    if (s == "md") return Format::md;
    if (s == "json") return Format::json;
    if (s == "csv") return Format::csv;
    throw std::invalid_argument("unknown format '" + s + "' (expected md, json or csv)");
}

Json rat_json(const Rat& r) { return fraction_string(r); }
Json int_json(const Int& i) {
    if (i >= std::numeric_limits<long long>::min() && i <= std::numeric_limits<long long>::max())
        return i.convert_to<long long>();
    return i.str(); // beyond 64 bits: decimal string to stay lossless
}

Json invariants_json(const covers::ChernInvariants& inv) {
    Json j;
    j["K2"] = int_json(inv.K2);
    j["e"] = int_json(inv.e);
    j["chi"] = rat_json(inv.chi);
    j["sigma"] = rat_json(inv.sigma);
    if (inv.nu) j["nu"] = rat_json(*inv.nu);
    if (inv.nuC) j["nuC"] = rat_json(*inv.nuC);
    j["positive_index"] = inv.flags.positive_index;
    j["bmy_satisfied"] = inv.flags.bmy_satisfied;
    j["bmy_violated"] = inv.flags.bmy_violated;
    j["ball_quotient"] = inv.flags.ball_quotient;
    j["bidisk_slope"] = inv.flags.bidisk_slope;
    if (inv.char_p) j["realizability"] = Json{{"char", *inv.char_p}};
    return j;
}

namespace {

bool is_fraction_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos || slash == 0 || slash + 1 >= s.size()) return false;
    std::size_t start = s[0] == '-' ? 1 : 0;
    if (start == slash) return false;
    for (std::size_t i = start; i < s.size(); ++i)
        if (i != slash && !std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

std::string scalar_to_string(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

std::string with_decimal(const Json& v, bool decimal) {
    std::string s = scalar_to_string(v);
    if (decimal && v.is_string() && is_fraction_string(v.get<std::string>())) {
        std::ostringstream os;
        os << s << " (~" << approx(parse_fraction(s)) << ")";
        return os.str();
    }
    return s;
}

void md_value(std::ostringstream& os, const std::string& key, const Json& v, bool decimal,
              int indent) {
    std::string pad(indent, ' ');
    if (v.is_object()) {
        os << pad << "- " << key << ":\n";
        for (auto it = v.begin(); it != v.end(); ++it) md_value(os, it.key(), it.value(), decimal, indent + 2);
    } else if (v.is_array() && !v.empty() && v[0].is_object()) {
        // table of records
        os << pad << "- " << key << ":\n\n";
        std::vector<std::string> cols;
        for (auto it = v[0].begin(); it != v[0].end(); ++it) cols.push_back(it.key());
        os << pad << "  |";
        for (const auto& c : cols) os << " " << c << " |";
        os << "\n" << pad << "  |";
        for (std::size_t i = 0; i < cols.size(); ++i) os << " --- |";
        os << "\n";
        for (const auto& row : v) {
            os << pad << "  |";
            for (const auto& c : cols)
                os << " " << (row.contains(c) ? with_decimal(row.at(c), decimal) : "") << " |";
            os << "\n";
        }
        os << "\n";
    } else if (v.is_array()) {
        os << pad << "- " << key << ": " << v.dump() << "\n";
    } else {
        os << pad << "- " << key << ": " << with_decimal(v, decimal) << "\n";
    }
}

std::string emit_md(const Report& r, bool decimal) {
    std::ostringstream os;
    os << "# " << r.command << "\n\n";
    if (!r.inputs.empty()) {
        os << "## Inputs\n\n";
        for (auto it = r.inputs.begin(); it != r.inputs.end(); ++it)
            md_value(os, it.key(), it.value(), false, 0);
        os << "\n";
    }
    os << "## Results\n\n";
    for (auto it = r.results.begin(); it != r.results.end(); ++it)
        md_value(os, it.key(), it.value(), decimal, 0);
    if (!r.provenance.empty()) {
        os << "\n## Provenance\n\n";
        for (const auto& p : r.provenance) os << "- " << p << "\n";
    }
    return os.str();
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

void csv_value(std::ostringstream& os, const std::string& prefix, const Json& v, bool decimal) {
    if (v.is_object()) {
        for (auto it = v.begin(); it != v.end(); ++it)
            csv_value(os, prefix.empty() ? it.key() : prefix + "." + it.key(), it.value(), decimal);
    } else if (v.is_array() && !v.empty() && v[0].is_object()) {
        std::vector<std::string> cols;
        for (auto it = v[0].begin(); it != v[0].end(); ++it) cols.push_back(it.key());
        os << prefix;
        for (const auto& c : cols) os << "," << csv_escape(c);
        os << "\n";
        for (const auto& row : v) {
            os << prefix;
            for (const auto& c : cols)
                os << "," << csv_escape(row.contains(c) ? with_decimal(row.at(c), decimal) : "");
            os << "\n";
        }
    } else if (v.is_array()) {
        os << csv_escape(prefix) << "," << csv_escape(v.dump()) << "\n";
    } else {
        os << csv_escape(prefix) << "," << csv_escape(with_decimal(v, decimal)) << "\n";
    }
}

std::string emit_csv(const Report& r, bool decimal) {
    std::ostringstream os;
    os << "key,value\n";
    csv_value(os, "", r.results, decimal);
    return os.str();
}

} // namespace

std::string emit(const Report& r, const EmitOptions& opt) {
    switch (opt.format) {
        case Format::json: return to_json(r).dump(2) + "\n";
        case Format::csv: return emit_csv(r, opt.decimal);
        case Format::md: default: return emit_md(r, opt.decimal);
    }
}

} // namespace kummerlab::report
