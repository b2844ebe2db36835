#include "kummerlab/cli.hpp"

#include "kummerlab/configs.hpp"
#include "kummerlab/covers.hpp"
#include "kummerlab/hodge.hpp"
#include "kummerlab/kodaira.hpp"
#include "kummerlab/report.hpp"
#include "kummerlab/search.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace kummerlab::cli {

namespace {

using report::EmitOptions;
using report::Json;
using report::Report;

constexpr int kOk = 0;
constexpr int kValidation = 2;
constexpr int kEmpty = 3;
constexpr int kUnknown = 64;

struct CommonOpts {
    std::string format = "md";
    bool decimal = false;
    void attach(CLI::App& app) {
        app.add_option("--format", format, "output format: md, json or csv")
            ->check(CLI::IsMember({"md", "json", "csv"}));
        app.add_flag("--decimal", decimal, "add a display-only decimal column");
    }
    EmitOptions emit() const { return {report::parse_format(format), decimal}; }
};

int parse_or_exit(CLI::App& app, const std::vector<std::string>& args, std::ostream& err) {
    // CLI11 parses right-to-left
    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        err << app.help();
        return -1; // handled, exit 0
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kValidation;
    }
    return kOk;
}

nlohmann::json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument("malformed JSON in '" + path + "': " + e.what());
    }
}

std::vector<long> parse_long_list(const std::string& s) {
    std::vector<long> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        out.push_back(std::stol(tok));
    }
    return out;
}

Json coords_json(const groups::GroupElement& g) {
    Json a = Json::array();
    for (const auto& c : g.coords) a.push_back(report::int_json(c));
    return a;
}

Json lattice_json(const geometry::LatticeVec& v) {
    Json a = Json::array();
    for (const auto& c : v) a.push_back(report::int_json(c));
    return a;
}

void emit_report(const Report& rep, const CommonOpts& common, std::ostream& out) {
    out << report::emit(rep, common.emit());
}

// ---- cover ----

int run_cover_invariants(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Chern invariants of a branched Abelian cover", "cover invariants"};
    std::string spec_path;
    CommonOpts common;
    app.add_option("--spec", spec_path, "cover spec JSON file")->required();
    common.attach(app);
    if (int rc = parse_or_exit(app, args, err)) return rc < 0 ? kOk : rc;

    auto spec = covers::cover_from_json(load_json_file(spec_path));
    covers::require_valid(spec);
    auto smooth = covers::smoothness_check(spec);
    Report rep;
    rep.command = "cover invariants";
    rep.inputs["spec"] = spec_path;
    rep.inputs["cover"] = covers::to_json(spec);
    rep.results["smooth"] = smooth.smooth;
    if (!smooth.smooth) {
        Json bad = Json::array();
        for (const auto& n : smooth.nodes)
            if (!n.direct_sum)
                bad.push_back(Json{{"curve_a", spec.geometry.curves[n.curve_a].label},
                                   {"curve_b", spec.geometry.curves[n.curve_b].label}});
        rep.results["failing_nodes"] = bad;
        rep.provenance.push_back("smoothness: inertia direct-sum test at every node");
        emit_report(rep, common, out);
        return kValidation;
    }
    auto inv = covers::invariants_general(spec);
    Json invj = report::invariants_json(inv);
    for (auto& [k, v] : invj.items()) rep.results[k] = v;
    rep.provenance.push_back("K2 = |G| (K_Y + sum (1-1/d_c) D_c)^2 in the intersection lattice");
    rep.provenance.push_back("e by additivity over the stratification of (Y, branch divisor)");
    rep.provenance.push_back("chi, sigma, nu, nu_C from Noether and the signature formula");
    emit_report(rep, common, out);
    return kOk;
}

int run_cover_kummer(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"closed-form invariants of the exponent-n Kummer cover", "cover kummer"};
    std::string config_name, config_path;
    long exponent = 0;
    CommonOpts common;
    app.add_option("--config", config_name, "builtin configuration name");
    app.add_option("--config-file", config_path, "configuration JSON file");
    app.add_option("--exponent", exponent, "cover exponent n >= 2")->required();
    common.attach(app);
    if (int rc = parse_or_exit(app, args, err)) return rc < 0 ? kOk : rc;
    if (config_name.empty() == config_path.empty())
        throw std::invalid_argument("give exactly one of --config / --config-file");

    auto cfg = config_name.empty() ? configs::config_from_json(load_json_file(config_path))
                                   : configs::builtin(config_name);
    configs::require_valid(cfg);
    auto st = configs::stats(cfg);
    auto inv = covers::invariants_kummer_plane(cfg, exponent);

    Report rep;
    rep.command = "cover kummer";
    rep.inputs["configuration"] = configs::to_json(cfg);
    rep.inputs["exponent"] = exponent;
    rep.results["stats"] = Json{{"r", st.r}, {"k", st.k}, {"v", st.v}, {"delta", st.delta}};
    Json invj = report::invariants_json(inv);
    for (auto& [k, v] : invj.items()) rep.results[k] = v;
    rep.provenance.push_back("closed Kummer forms in n and (r, k, v, delta)");
    emit_report(rep, common, out);
    return kOk;
}

void hodge_results(const covers::CoverSpec& spec, Report& rep) {
    auto [q, pg] = hodge::irregularity_and_pg(spec);
    rep.results["q"] = report::int_json(q);
    rep.results["p_g"] = report::int_json(pg);
    Json table = Json::array();
    for (const auto& cb : hodge::character_bundles(spec)) {
        Json row;
        row["chi"] = coords_json(groups::GroupElement{cb.chi.group, cb.chi.coords});
        row["L_chi"] = lattice_json(cb.l_chi);
        row["h0_K_plus_L"] = report::int_json(cb.h0_canonical_twist);
        row["h1_minus_L"] = report::int_json(cb.h1_negative);
        table.push_back(row);
    }
    rep.results["characters"] = table;
    rep.provenance.push_back("p_* O_S = O_Y + sum_chi O_Y(-L_chi); q = sum h1(-L_chi), p_g = sum h0(K_Y + L_chi)");
}

int run_cover_hodge(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"irregularity, geometric genus and character table", "cover hodge"};
    std::string spec_path;
    CommonOpts common;
    app.add_option("--spec", spec_path, "cover spec JSON file")->required();
    common.attach(app);
    if (int rc = parse_or_exit(app, args, err)) return rc < 0 ? kOk : rc;

    auto spec = covers::cover_from_json(load_json_file(spec_path));
    covers::require_valid(spec);
    Report rep;
    rep.command = "cover hodge";
    rep.inputs["spec"] = spec_path;
    hodge_results(spec, rep);
    if (spec.geometry.ambient == geometry::Ambient::plane_blowup) {
        Json canon = Json::array();
        for (const auto& cc : hodge::canonical_characters(spec)) {
            Json row;
            row["chi"] = coords_json(groups::GroupElement{cc.chi.group, cc.chi.coords});
            row["L_chi"] = report::int_json(cc.l_chi);
            Json ze = Json::array();
            for (const auto& e : cc.z_exponents) ze.push_back(report::int_json(e));
            row["z_exponents"] = ze;
            row["h0"] = report::int_json(cc.h0);
            canon.push_back(row);
        }
        rep.results["canonical_characters"] = canon;
        rep.provenance.push_back("H0(K_S) = sum_chi z_chi H0(O(-3 + L_chi)), z_chi exponents n-1-[chi(g_j)]");
    }
    emit_report(rep, common, out);
    return kOk;
}

int run_cover(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    if (args.empty()) {
        err << "usage: cover invariants|kummer|hodge [options]\n";
        return kUnknown;
    }
    std::vector<std::string> rest(args.begin() + 1, args.end());
    if (args[0] == "invariants") return run_cover_invariants(rest, out, err);
    if (args[0] == "kummer") return run_cover_kummer(rest, out, err);
    if (args[0] == "hodge") return run_cover_hodge(rest, out, err);
    err << "unknown cover subcommand '" << args[0] << "'\n";
    return kUnknown;
}

// ---- delpezzo ----

Json assignment_json(const search::DelPezzoAssignment& a) {
    Json j = Json::object();
    for (int t = 0; t < 10; ++t) {
        auto [i, jdx] = geometry::delpezzo_pairs()[t];
        j[std::to_string(i) + std::to_string(jdx)] = Json::array({a.v[t][0], a.v[t][1]});
    }
    return j;
}

int run_delpezzo_invariants(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"invariants of covers of the degree-5 del Pezzo branched on its ten lines",
                 "delpezzo invariants"};
    long n = 0;
    std::string spec_path, model = "kummer";
    CommonOpts common;
    app.add_option("--n", n, "uniform exponent");
    app.add_option("--spec", spec_path, "assignment spec JSON file");
    app.add_option("--model", model, "kummer (group (Z/n)^5) or bcdh (group (Z/n)^2)")
        ->check(CLI::IsMember({"kummer", "bcdh"}));
    common.attach(app);
    if (int rc = parse_or_exit(app, args, err)) return rc < 0 ? kOk : rc;

    Report rep;
    rep.command = "delpezzo invariants";
    if (!spec_path.empty()) {
        auto spec = covers::cover_from_json(load_json_file(spec_path));
        covers::require_valid(spec);
        auto inv = covers::invariants_general(spec);
        rep.inputs["spec"] = spec_path;
        Json invj = report::invariants_json(inv);
    for (auto& [k, v] : invj.items()) rep.results[k] = v;
        rep.provenance.push_back("stratified invariants of the assignment cover");
    } else if (model == "kummer") {
        if (n < 2) throw std::invalid_argument("--n must be >= 2");
        auto inv = covers::invariants_hk_delpezzo(n);
        rep.inputs["n"] = n;
        rep.inputs["model"] = model;
        Json invj = report::invariants_json(inv);
    for (auto& [k, v] : invj.items()) rep.results[k] = v;
        rep.provenance.push_back("K2 = 5(n-2)^2 n^3, e = n^3 (2n^2 - 10n + 15)");
    } else {
        auto recd = covers::bcdh_invariants(n);
        rep.inputs["n"] = n;
        rep.inputs["model"] = model;
        Json invj = report::invariants_json(recd.invariants);
        for (auto& [k, v] : invj.items()) rep.results[k] = v;
        rep.results["base_genus"] = recd.base_genus;
        rep.results["fibre_genus"] = recd.fibre_genus;
        rep.results["singular_fibres"] = recd.singular_fibres;
        rep.provenance.push_back("(Z/n)^2 cover; Albanese genera b = (n-1)/2, g = n-1; three singular fibres");
    }
    emit_report(rep, common, out);
    return kOk;
}

int run_delpezzo_classify(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"orbit classification of admissible (Z/n)^2 assignments", "delpezzo classify-orbits"};
    int n = 5;
    CommonOpts common;
    app.add_option("--n", n, "prime exponent (v1: 2, 3, 5, 7)");
    common.attach(app);
    if (int rc = parse_or_exit(app, args, err)) return rc < 0 ? kOk : rc;

    auto cls = search::classify_orbits(n);
    Report rep;
    rep.command = "delpezzo classify-orbits";
    rep.inputs["n"] = n;
    rep.results["kernel_dimension"] = cls.kernel_dim;
    rep.results["admissible_count"] = cls.admissible_count;
    rep.results["orbit_count"] = cls.orbits.size();
    Json table = Json::array();
    for (const auto& o : cls.orbits) {
        Json row;
        row["size"] = o.size;
        row["K2"] = report::int_json(o.invariants.K2);
        row["e"] = report::int_json(o.invariants.e);
        row["chi"] = report::rat_json(o.invariants.chi);
        row["q"] = report::int_json(o.q);
        row["p_g"] = report::int_json(o.pg);
        row["representative"] = assignment_json(o.representative);
        table.push_back(row);
    }
    rep.results["orbits"] = table;
    rep.provenance.push_back("relation system solved over Z/n; admissible = nonzero, generating, independent at the 15 nodes");
    rep.provenance.push_back("orbits under GL(2, Z/n) x S5 by union-find over generator images");
    emit_report(rep, common, out);
    return cls.orbits.empty() ? kEmpty : kOk;
}

int run_delpezzo_hodge(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"q, p_g and character table of a del Pezzo assignment cover", "delpezzo hodge"};
    std::string spec_path;
    CommonOpts common;
    app.add_option("--spec", spec_path, "assignment spec JSON file")->required();
    common.attach(app);
    if (int rc = parse_or_exit(app, args, err)) return rc < 0 ? kOk : rc;

    auto spec = covers::cover_from_json(load_json_file(spec_path));
    if (spec.geometry.ambient != geometry::Ambient::delpezzo5)
        throw std::invalid_argument("spec is not a del Pezzo assignment");
    covers::require_valid(spec);
    Report rep;
    rep.command = "delpezzo hodge";
    rep.inputs["spec"] = spec_path;
    hodge_results(spec, rep);
    emit_report(rep, common, out);
    return kOk;
}

int run_delpezzo(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    if (args.empty()) {
        err << "usage: delpezzo invariants|classify-orbits|hodge [options]\n";
        return kUnknown;
    }
    std::vector<std::string> rest(args.begin() + 1, args.end());
    if (args[0] == "invariants") return run_delpezzo_invariants(rest, out, err);
    if (args[0] == "classify-orbits") return run_delpezzo_classify(rest, out, err);
    if (args[0] == "hodge") return run_delpezzo_hodge(rest, out, err);
    err << "unknown delpezzo subcommand '" << args[0] << "'\n";
    return kUnknown;
}

// ---- vhs ----

int run_vhs(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    if (args.empty() || args[0] != "analyze") {
        err << "usage: vhs analyze --n N --m a,b,c,d\n";
        return kUnknown;
    }
    CLI::App app{"Fujita splitting of the cyclic quadruple-cover family", "vhs analyze"};
    long n = 0;
    std::string mlist;
    CommonOpts common;
    app.add_option("--n", n, "cyclic exponent")->required();
    app.add_option("--m", mlist, "four branch exponents m0,m1,m2,m3")->required();
    common.attach(app);
    std::vector<std::string> rest(args.begin() + 1, args.end());
    if (int rc = parse_or_exit(app, rest, err)) return rc < 0 ? kOk : rc;

    auto ms = parse_long_list(mlist);
    if (ms.size() != 4) throw std::invalid_argument("--m needs exactly four entries");
    hodge::CyclicQuadrupleCover c(n, {ms[0], ms[1], ms[2], ms[3]});
    auto split = hodge::fujita_split(c);

    Report rep;
    rep.command = "vhs analyze";
    rep.inputs["n"] = n;
    rep.inputs["m"] = ms;
    Json table = Json::array();
    int genus = 0;
    for (const auto& e : split.entries) {
        genus += e.dim;
        Json row;
        row["character"] = e.character;
        row["dim_V"] = e.dim;
        row["kind"] = e.kind == hodge::SummandKind::flat_rank2    ? "flat_rank2"
                      : e.kind == hodge::SummandKind::ample_rank1 ? "ample_rank1"
                                                                  : "absorbed";
        table.push_back(row);
    }
    rep.results["eigenspaces"] = table;
    rep.results["rank_A"] = split.rank_ample;
    Json qranks = Json::array();
    for (std::size_t i = 0; i < split.flat_characters.size(); ++i) qranks.push_back(2);
    rep.results["rank_Q"] = qranks;
    rep.results["fibre_genus"] = genus;
    rep.results["infinite_monodromy"] = split.infinite_monodromy;
    rep.provenance.push_back("dim V^chi_i = ([i m0]+[i m1]+[i m2]+[i m3]-n)/n");
    rep.provenance.push_back("infinite monodromy via the indefinite Galois-conjugate criterion (sufficient)");
    emit_report(rep, common, out);
    return kOk;
}

// ---- kodaira ----

int run_kodaira(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    if (args.empty()) {
        err << "usage: kodaira slope|feasible|mu|scaling|tan|basechange [options]\n";
        return kUnknown;
    }
    std::string sub = args[0];
    std::vector<std::string> rest(args.begin() + 1, args.end());
    CommonOpts common;
    Report rep;

    if (sub == "slope") {
        CLI::App app{"Chern slope of a very-simple double Kodaira fibration", "kodaira slope"};
        long b = 0, r = -1;
        std::string mlist;
        bool limit = false;
        app.add_option("--b", b, "base genus >= 2")->required();
        app.add_option("--m", mlist, "branching orders m1,m2,...");
        app.add_option("--r", r, "number of branch graphs (limit variant)");
        app.add_flag("--limit", limit, "all m_i -> infinity limit");
        common.attach(app);
        if (int rc = parse_or_exit(app, rest, err)) return rc < 0 ? kOk : rc;
        rep.command = "kodaira slope";
        rep.inputs["b"] = b;
        Rat nu;
        if (limit) {
            if (r < 0) throw std::invalid_argument("--limit needs --r");
            rep.inputs["r"] = r;
            nu = kodaira::very_simple_slope_limit(b, r);
            rep.provenance.push_back("nu_C = 3 - 2/(2 + r/(b-1)) (m_i -> infinity)");
        } else {
            auto ms = parse_long_list(mlist);
            std::vector<Int> m(ms.begin(), ms.end());
            rep.inputs["m"] = ms;
            nu = kodaira::very_simple_slope(b, m);
            rep.provenance.push_back("nu_C = 2 + sum(1 - 1/m_i^2) / (2(b-1) + sum(1 - 1/m_i))");
        }
        rep.results["nuC"] = report::rat_json(nu);
        emit_report(rep, common, out);
        return kOk;
    }
    if (sub == "feasible") {
        CLI::App app{"integer chi window for a Kodaira fibration", "kodaira feasible"};
        long g = 0, b = 0;
        app.add_option("--g", g, "fibre genus >= 3")->required();
        app.add_option("--b", b, "base genus >= 2")->required();
        common.attach(app);
        if (int rc = parse_or_exit(app, rest, err)) return rc < 0 ? kOk : rc;
        auto f = kodaira::kodaira_feasibility(g, b);
        rep.command = "kodaira feasible";
        rep.inputs["g"] = g;
        rep.inputs["b"] = b;
        rep.results["feasible"] = f.feasible;
        rep.results["chi_lower"] = report::rat_json(f.lower);
        rep.results["chi_upper"] = report::rat_json(f.upper);
        Json chis = Json::array();
        for (const auto& c : f.chi_values) chis.push_back(report::int_json(c));
        rep.results["chi_values"] = chis;
        rep.provenance.push_back("(g-1)(b-1) < chi < (4/3)(g-1)(b-1), integer chi required");
        emit_report(rep, common, out);
        return f.feasible ? kOk : kEmpty;
    }
    if (sub == "mu") {
        CLI::App app{"Zeuthen-Segre residue", "kodaira mu"};
        long long e = 0;
        long b = 0, g = 0;
        app.add_option("--e", e, "Euler number")->required();
        app.add_option("--b", b, "base genus")->required();
        app.add_option("--g", g, "fibre genus")->required();
        common.attach(app);
        if (int rc = parse_or_exit(app, rest, err)) return rc < 0 ? kOk : rc;
        auto m = kodaira::zeuthen_segre_mu(Int(e), b, g);
        rep.command = "kodaira mu";
        rep.inputs["e"] = e;
        rep.inputs["b"] = b;
        rep.inputs["g"] = g;
        rep.results["mu"] = report::int_json(m.mu);
        rep.results["consistent"] = m.nonnegative;
        rep.provenance.push_back("mu = e - 4(g-1)(b-1)");
        emit_report(rep, common, out);
        return kOk;
    }
    if (sub == "scaling") {
        CLI::App app{"fibre genus of the n-torsion base change", "kodaira scaling"};
        long g = 0, n = 0;
        app.add_option("--g", g, "fibre genus >= 2")->required();
        app.add_option("--n", n, "torsion level >= 1")->required();
        common.attach(app);
        if (int rc = parse_or_exit(app, rest, err)) return rc < 0 ? kOk : rc;
        rep.command = "kodaira scaling";
        rep.inputs["g"] = g;
        rep.inputs["n"] = n;
        rep.results["g_n"] = report::int_json(kodaira::fibre_genus_scaling(g, n));
        rep.provenance.push_back("g_n = 1 + (g-1) n^(2g)");
        emit_report(rep, common, out);
        return kOk;
    }
    if (sub == "tan") {
        CLI::App app{"minimal singular-fibre count from Tan's inequality", "kodaira tan"};
        long b = 0, g = 0;
        std::string chi_s, deg_s;
        app.add_option("--b", b, "base genus")->required();
        app.add_option("--g", g, "fibre genus >= 1")->required();
        app.add_option("--chi", chi_s, "chi(O_S), exact fraction allowed");
        app.add_option("--deg", deg_s, "deg f_* omega directly");
        common.attach(app);
        if (int rc = parse_or_exit(app, rest, err)) return rc < 0 ? kOk : rc;
        if (chi_s.empty() == deg_s.empty())
            throw std::invalid_argument("give exactly one of --chi / --deg");
        rep.command = "kodaira tan";
        rep.inputs["b"] = b;
        rep.inputs["g"] = g;
        Int s;
        if (!deg_s.empty()) {
            Rat deg = parse_fraction(deg_s);
            rep.inputs["deg"] = report::rat_json(deg);
            s = kodaira::tan_min_singular_fibres_deg(b, g, deg);
        } else {
            Rat chi = parse_fraction(chi_s);
            rep.inputs["chi"] = report::rat_json(chi);
            s = kodaira::tan_min_singular_fibres(b, g, chi);
        }
        rep.results["min_singular_fibres"] = report::int_json(s);
        rep.provenance.push_back("smallest integer s with (g/2)(2b-2+s) > deg f_* omega");
        emit_report(rep, common, out);
        return kOk;
    }
    if (sub == "basechange") {
        CLI::App app{"slope of a ramified base change", "kodaira basechange"};
        std::string k2_s;
        long g = 0, b = 0, d = 1, r = 0;
        app.add_option("--k2", k2_s, "K^2 of the fibred surface")->required();
        app.add_option("--g", g, "fibre genus >= 2")->required();
        app.add_option("--b", b, "base genus >= 2")->required();
        app.add_option("--d", d, "degree of the base change")->required();
        app.add_option("--r", r, "ramification degree")->required();
        common.attach(app);
        if (int rc = parse_or_exit(app, rest, err)) return rc < 0 ? kOk : rc;
        rep.command = "kodaira basechange";
        rep.inputs["K2"] = k2_s;
        rep.inputs["g"] = g;
        rep.inputs["b"] = b;
        rep.inputs["d"] = d;
        rep.inputs["r"] = r;
        Rat nu = kodaira::base_change_slope(parse_fraction(k2_s), g, b, d, r);
        rep.results["nuC"] = report::rat_json(nu);
        rep.provenance.push_back("nu_C(S') = (K2 + 4(r/d)(g-1)) / (4(g-1)(b-1 + r/2d))");
        emit_report(rep, common, out);
        return kOk;
    }
    err << "unknown kodaira subcommand '" << sub << "'\n";
    return kUnknown;
}

// ---- beauville ----

int run_beauville(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    if (args.empty() || args[0] != "search") {
        err << "usage: beauville search --n N\n";
        return kUnknown;
    }
    CLI::App app{"Beauville structures on (Z/n)^2", "beauville search"};
    long n = 0;
    CommonOpts common;
    app.add_option("--n", n, "group parameter")->required();
    common.attach(app);
    std::vector<std::string> rest(args.begin() + 1, args.end());
    if (int rc = parse_or_exit(app, rest, err)) return rc < 0 ? kOk : rc;

    auto res = search::beauville_search(n);
    Report rep;
    rep.command = "beauville search";
    rep.inputs["n"] = n;
    rep.results["witness_count"] = res.witnesses.size();
    Json table = Json::array();
    auto triple_json = [](const search::Triple& t) {
        Json a = Json::array();
        for (const auto& e : t.e) a.push_back(Json::array({e[0], e[1]}));
        return a;
    };
    for (const auto& w : res.witnesses) {
        Json row;
        row["triple_1"] = triple_json(w.t1);
        row["triple_2"] = triple_json(w.t2);
        row["free"] = search::beauville_free(w, n);
        table.push_back(row);
    }
    rep.results["witnesses"] = table;
    rep.provenance.push_back("exhaustive search with the first triple normalized to ((1,0),(0,1),(-1,-1))");
    rep.provenance.push_back("freeness: the two stabilizer-set unions meet only in 0");
    emit_report(rep, common, out);
    return res.witnesses.empty() ? kEmpty : kOk;
}

// ---- pack ----

int run_pack(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"group-theoretic sphere packing", "pack"};
    std::string table_path, stab_list, mode = "exact";
    CommonOpts common;
    app.add_option("--table", table_path, "Cayley table JSON file")->required();
    app.add_option("--stabilizers", stab_list, "stabilizer elements, comma separated")->required();
    app.add_option("--mode", mode, "exact or greedy")->check(CLI::IsMember({"exact", "greedy"}));
    common.attach(app);
    if (int rc = parse_or_exit(app, args, err)) return rc < 0 ? kOk : rc;

    auto tj = load_json_file(table_path);
    auto rows = (tj.is_object() ? tj.at("table") : tj).get<std::vector<std::vector<int>>>();
    search::CayleyGroup g(rows);
    auto stabs_l = parse_long_list(stab_list);
    std::vector<int> stabs(stabs_l.begin(), stabs_l.end());
    search::PackingProblem prob{g, stabs};
    auto mode_e = mode == "exact" ? search::PackingMode::exact : search::PackingMode::greedy;
    auto res = search::sphere_packing(prob, mode_e);

    Report rep;
    rep.command = "pack";
    rep.inputs["table"] = table_path;
    rep.inputs["stabilizers"] = stabs;
    rep.inputs["mode"] = mode;
    rep.results["r"] = res.r;
    rep.results["elements"] = res.elements;
    rep.provenance.push_back(mode == "exact"
                                 ? "maximum clique on the compatibility graph (branch and bound)"
                                 : "greedy maximal packing in element order");
    emit_report(rep, common, out);
    return kOk;
}

// ---- catalog ----

Json monodromy_catalog() {
    Json j = Json::object();
    j["pardini_affine"] = Json{
        {"kind", "cover_spec"},
        {"spec", Json{{"configuration", "general_position(5)"},
                      {"group", Json{{"orders", Json::array({5, 5})}}},
                      {"monodromy", Json::array({Json::array({0, 1}), Json::array({1, 1}),
                                                 Json::array({2, 1}), Json::array({3, 1}),
                                                 Json::array({4, 1})})}}},
        {"note", "five points of an affine line avoiding the origin in (Z/5)^2"}};
    j["pardini_second"] = Json{
        {"kind", "cover_spec"},
        {"spec", Json{{"configuration", "general_position(5)"},
                      {"group", Json{{"orders", Json::array({5, 5})}}},
                      {"monodromy", Json::array({Json::array({1, 0}), Json::array({0, 1}),
                                                 Json::array({1, 1}), Json::array({2, 4}),
                                                 Json::array({1, 4})})}}},
        {"note", "affinely independent variant; canonical system has two simple base points"}};
    auto six = [](std::initializer_list<std::pair<int, int>> vs, int idx) {
        Json arr = Json::array();
        for (auto [a, b] : vs) arr.push_back(Json::array({a, b}));
        return Json{{"kind", "six_tuple"},
                    {"values", arr},
                    {"orbit_hint", idx},
                    {"note", "verbatim six-tuple; the line-ordering convention is ambiguous, "
                             "use delpezzo classify-orbits for canonical representatives"}};
    };
    j["bcd_u1"] = six({{1, 0}, {1, 0}, {0, 1}, {2, 1}, {2, 1}, {4, 2}}, 1);
    j["bcd_u2"] = six({{1, 0}, {1, 0}, {0, 1}, {2, 1}, {4, 2}, {2, 1}}, 2);
    j["bcd_u3"] = six({{1, 0}, {1, 0}, {0, 1}, {4, 1}, {3, 2}, {1, 1}}, 3);
    j["bcd_u4"] = six({{1, 0}, {1, 0}, {0, 1}, {1, 1}, {0, 3}, {2, 0}}, 4);
    return j;
}

int run_catalog(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    if (args.empty()) {
        err << "usage: catalog list | catalog show NAME\n";
        return kUnknown;
    }
    CommonOpts common;
    Report rep;
    if (args[0] == "list") {
        CLI::App app{"catalog contents", "catalog list"};
        common.attach(app);
        std::vector<std::string> rest(args.begin() + 1, args.end());
        if (int rc = parse_or_exit(app, rest, err)) return rc < 0 ? kOk : rc;
        rep.command = "catalog list";
        rep.results["configurations"] = configs::builtin_names();
        std::vector<std::string> mono;
        Json monoj = monodromy_catalog();
        for (auto& [k, v] : monoj.items()) mono.push_back(k);
        rep.results["monodromy_data"] = mono;
        emit_report(rep, common, out);
        return kOk;
    }
    if (args[0] == "show") {
        CLI::App app{"catalog entry", "catalog show"};
        std::string name;
        app.add_option("name", name, "entry name")->required();
        common.attach(app);
        std::vector<std::string> rest(args.begin() + 1, args.end());
        if (int rc = parse_or_exit(app, rest, err)) return rc < 0 ? kOk : rc;
        rep.command = "catalog show";
        rep.inputs["name"] = name;
        auto mono = monodromy_catalog();
        if (mono.contains(name)) {
            rep.results = mono.at(name);
        } else {
            auto cfg = configs::builtin(name);
            auto st = configs::stats(cfg);
            rep.results["configuration"] = configs::to_json(cfg);
            rep.results["stats"] = Json{{"r", st.r}, {"k", st.k}, {"v", st.v}, {"delta", st.delta}};
        }
        emit_report(rep, common, out);
        return kOk;
    }
    err << "unknown catalog subcommand '" << args[0] << "'\n";
    return kUnknown;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    if (args.empty()) {
        err << "usage: kummerlab cover|delpezzo|vhs|kodaira|beauville|pack|catalog ...\n";
        return kUnknown;
    }
    std::vector<std::string> rest(args.begin() + 1, args.end());
    try {
        if (args[0] == "cover") return run_cover(rest, out, err);
        if (args[0] == "delpezzo") return run_delpezzo(rest, out, err);
        if (args[0] == "vhs") return run_vhs(rest, out, err);
        if (args[0] == "kodaira") return run_kodaira(rest, out, err);
        if (args[0] == "beauville") return run_beauville(rest, out, err);
        if (args[0] == "pack") return run_pack(rest, out, err);
        if (args[0] == "catalog") return run_catalog(rest, out, err);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kValidation;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return kValidation;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kValidation;
    }
    err << "unknown subcommand '" << args[0] << "'\n";
    return kUnknown;
}

} // namespace kummerlab::cli
