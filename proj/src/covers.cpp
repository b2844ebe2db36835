#include "kummerlab/covers.hpp"

#include "kummerlab/detail/snf.hpp"

#include <nlohmann/json.hpp>

#include <numeric>
#include <stdexcept>

namespace kummerlab::covers {

using groups::GroupElement;
using groups::GroupHandle;

namespace {

// sum_c (basis_t . D_c) g_c for the diagonal form diag(1,-1,...,-1)
GroupElement homology_relation(const CoverSpec& spec, int t) {
    GroupElement acc = groups::zero(spec.group);
    for (std::size_t c = 0; c < spec.monodromy.size(); ++c) {
        Int coeff = spec.geometry.curves[c].cls[t];
        if (t > 0) coeff = -coeff;
        acc = groups::add(acc, groups::scalar_mul(coeff, spec.monodromy[c]));
    }
    return acc;
}

constexpr long kSaturationCap = 1'000'000;

} // namespace

std::vector<std::string> validate(const CoverSpec& spec) {
    std::vector<std::string> bad;
    if (spec.monodromy.size() != spec.geometry.curves.size()) {
        bad.push_back("monodromy count differs from branch curve count");
        return bad;
    }
    for (const auto& g : spec.monodromy)
        if (!g.group || *g.group != *spec.group) {
            bad.push_back("monodromy element outside the cover group");
            return bad;
        }
    for (int t = 0; t < spec.geometry.lattice.rank; ++t)
        if (!homology_relation(spec, t).is_zero())
            bad.push_back("homology relation fails on lattice basis vector " + std::to_string(t));
    const bool gen = spec.group->cardinality() <= kSaturationCap
                         ? groups::generates(spec.monodromy, spec.group)
                         : groups::subgroup_order(spec.monodromy, spec.group) == spec.group->cardinality();
    if (!gen) bad.push_back("monodromy elements do not generate the group (cover disconnected)");
    return bad;
}

void require_valid(const CoverSpec& spec) {
    auto bad = validate(spec);
    if (!bad.empty()) {
        std::string msg = "invalid cover spec:";
        for (const auto& b : bad) msg += "\n  - " + b;
        throw std::invalid_argument(msg);
    }
}

ChernInvariants chern_from_k2_e(const Int& k2, const Int& e) {
    ChernInvariants inv;
    inv.K2 = k2;
    inv.e = e;
    inv.chi = Rat(k2 + e, 12);
    inv.sigma = Rat(k2 - 2 * e, 3);
    if (inv.chi != 0) inv.nu = Rat(k2) / inv.chi;
    if (e != 0) inv.nuC = Rat(k2, e);
    inv.flags.positive_index = inv.sigma > 0;
    if (inv.nuC) {
        // BMY in slope form: nu_C <= 3 (e > 0 on everything of general type here)
        inv.flags.bmy_satisfied = e > 0 && k2 <= 3 * e;
        inv.flags.bmy_violated = e > 0 && k2 > 3 * e;
        inv.flags.ball_quotient = *inv.nuC == 3;
        inv.flags.bidisk_slope = *inv.nuC == 2;
    }
    return inv;
}

SmoothnessReport smoothness_check(const CoverSpec& spec) {
    for (std::size_t c = 0; c < spec.monodromy.size(); ++c)
        if (spec.monodromy[c].is_zero())
            throw std::domain_error("unsupported cover: branch curve '" + spec.geometry.curves[c].label +
                                    "' carries zero monodromy (every component must be branched)");
    SmoothnessReport rep;
    for (const auto& [a, b] : spec.geometry.nodes) {
        bool ok = groups::direct_sum_test(spec.monodromy[a], spec.monodromy[b]);
        rep.nodes.push_back({a, b, ok});
        rep.smooth = rep.smooth && ok;
    }
    return rep;
}

namespace {

struct Quotient {
    GroupHandle group;
    std::vector<GroupElement> generator_images; // of the ambient Z^r basis
    std::vector<std::vector<Int>> u_inv;        // preimages of quotient generators
    std::vector<std::size_t> kept;              // SNF indices with d_i > 1
};

// (Z^r) / < columns: d_j e_j ; the relation vector >
Quotient line_monodromy_quotient(const std::vector<Int>& d, const std::vector<Int>& relation) {
    const std::size_t r = d.size();
    detail::Matrix m(r, std::vector<Int>(r + 1, 0));
    for (std::size_t j = 0; j < r; ++j) {
        m[j][j] = d[j];
        m[j][r] = relation[j];
    }
    auto s = detail::smith_normal_form(std::move(m));
    auto diag = s.diag();
    Quotient q;
    std::vector<Int> orders;
    for (std::size_t i = 0; i < diag.size(); ++i)
        if (diag[i] > 1) {
            orders.push_back(diag[i]);
            q.kept.push_back(i);
        }
    if (orders.empty()) throw std::domain_error("trivial maximal cover group");
    q.group = groups::make_group(orders);
    for (std::size_t j = 0; j < r; ++j) {
        std::vector<Int> coords;
        for (std::size_t t : q.kept) coords.push_back(s.u[t][j]);
        q.generator_images.emplace_back(q.group, std::move(coords));
    }
    q.u_inv = std::move(s.u_inv);
    return q;
}

} // namespace

MaximalCover maximal_cover(const CoverSpec& spec) {
    if (spec.geometry.ambient != geometry::Ambient::plane_blowup)
        throw std::domain_error("maximal cover is defined for plane-derived geometries");
    require_valid(spec);
    const int r = spec.geometry.line_count;
    const int k = spec.geometry.blowup_count;

    std::vector<Int> d, mult;
    for (int j = 0; j < r; ++j) {
        d.push_back(groups::element_order(spec.monodromy[j]));
        mult.push_back(spec.geometry.curves[j].cls[0]); // line degree, always 1 here
    }
    auto q = line_monodromy_quotient(d, mult);

    MaximalCover out;
    out.spec.geometry = spec.geometry;
    out.spec.group = q.group;
    out.spec.monodromy = q.generator_images;
    for (int i = 0; i < k; ++i) {
        GroupElement eps = groups::zero(q.group);
        for (int j = 0; j < r; ++j)
            if (spec.geometry.incidence[j][i])
                eps = groups::add(eps, q.generator_images[j]);
        out.spec.monodromy.push_back(std::move(eps));
    }

    if (q.group->cardinality() == spec.group->cardinality()) {
        // G'' -> G is an isomorphism: the spec was already maximal
        MaximalCover same;
        same.spec = spec;
        same.already_maximal = true;
        for (std::size_t t = 0; t < spec.group->rank(); ++t) {
            std::vector<Int> coords(spec.group->rank(), 0);
            coords[t] = 1;
            same.surjection.emplace_back(spec.group, std::move(coords));
        }
        return same;
    }
    // surjection G'' -> G on the standard generators of G''
    for (std::size_t t : q.kept) {
        GroupElement im = groups::zero(spec.group);
        for (int j = 0; j < r; ++j)
            im = groups::add(im, groups::scalar_mul(q.u_inv[j][t], spec.monodromy[j]));
        out.surjection.push_back(std::move(im));
    }
    return out;
}

ChernInvariants invariants_general(const CoverSpec& spec) {
    require_valid(spec);
    auto smooth = smoothness_check(spec);
    if (!smooth.smooth)
        throw std::domain_error("cover is not smooth: some node fails the inertia direct-sum test");

    const auto& geo = spec.geometry;
    const Int order = spec.group->cardinality();

    std::vector<Int> d;
    for (const auto& g : spec.monodromy) d.push_back(groups::element_order(g));

    // K_S^2 = |G| (K_Y + sum_c (1 - 1/d_c) D_c)^2
    const int rank = geo.lattice.rank;
    std::vector<Rat> adj(rank);
    for (int t = 0; t < rank; ++t) adj[t] = geo.lattice.canonical[t];
    for (std::size_t c = 0; c < geo.curves.size(); ++c) {
        Rat w = Rat(d[c] - 1, d[c]);
        for (int t = 0; t < rank; ++t) adj[t] += w * Rat(geo.curves[c].cls[t]);
    }
    Rat self = adj[0] * adj[0];
    for (int t = 1; t < rank; ++t) self -= adj[t] * adj[t];
    Rat k2 = Rat(order) * self;
    if (!is_integer(k2))
        throw std::domain_error("non-integral K^2 = " + fraction_string(k2) + " (inconsistent cover spec)");

    // Euler number by additivity over the stratification
    Int open_sum = 0;
    for (const auto& c : geo.curves) open_sum += c.open_euler;
    Int complement = Int(geo.lattice.euler) - open_sum - Int(geo.nodes.size());
    Rat e = Rat(order) * complement;
    for (std::size_t c = 0; c < geo.curves.size(); ++c)
        e += Rat(order, d[c]) * geo.curves[c].open_euler;
    for (const auto& [a, b] : geo.nodes) e += Rat(order, d[a] * d[b]);
    if (!is_integer(e))
        throw std::domain_error("non-integral Euler number (inconsistent cover spec)");

    auto inv = chern_from_k2_e(to_integer(k2), to_integer(e));
    if (!is_integer(inv.chi))
        throw std::domain_error("non-integral chi = " + fraction_string(inv.chi) + " (inconsistent cover spec)");
    inv.char_p = geo.char_p;
    return inv;
}

CoverSpec kummer_plane_spec(const configs::LineConfiguration& c, long n) {
    if (n < 2) throw std::invalid_argument("exponent must be >= 2");
    auto geo = geometry::blowup_plane(c);
    const int r = geo.line_count, k = geo.blowup_count;
    auto q = line_monodromy_quotient(std::vector<Int>(r, n), std::vector<Int>(r, 1));
    CoverSpec spec;
    spec.geometry = std::move(geo);
    spec.group = q.group;
    spec.monodromy = q.generator_images;
    for (int i = 0; i < k; ++i) {
        GroupElement eps = groups::zero(q.group);
        for (int j = 0; j < r; ++j)
            if (spec.geometry.incidence[j][i]) eps = groups::add(eps, q.generator_images[j]);
        spec.monodromy.push_back(std::move(eps));
    }
    return spec;
}

ChernInvariants invariants_kummer_plane(const configs::LineConfiguration& c, long n) {
    configs::require_valid(c);
    if (n < 2) throw std::invalid_argument("exponent must be >= 2");
    const auto st = configs::stats(c);

    // branching-order precondition: every exceptional monodromy of the maximal
    // cover has full order n
    {
        auto spec = kummer_plane_spec(c, n);
        for (int i = 0; i < st.k; ++i)
            if (groups::element_order(spec.monodromy[st.r + i]) != n)
                throw std::domain_error("branching-order degeneration: ord(eps_" + std::to_string(i + 1) +
                                        ") < n; the closed Kummer forms do not apply");
    }

    Int nn = n;
    Int pw = 1; // n^(r-1)
    for (int j = 1; j < st.r; ++j) pw *= nn;
    const Rat w(n - 1, n); // 1 - 1/n

    Rat bracket = (Rat(-3) + Rat(st.r) * w) * (Rat(-3) + Rat(st.r) * w);
    for (const auto& p : c.points) {
        Rat term = Rat(1) + w * Rat(1 - p.valency);
        bracket -= term * term;
    }
    Rat k2 = Rat(pw) * bracket;

    const Rat w2 = Rat(nn * nn - 1, nn * nn); // 1 - 1/n^2
    Rat ebr = Rat(st.k + 3) - w * Rat(2 * st.k - 2 * st.v + 2 * st.r - 2 * st.delta) -
              w2 * Rat(st.v + st.delta);
    Rat e = Rat(pw) * ebr;

    if (!is_integer(k2) || !is_integer(e))
        throw std::logic_error("Kummer closed forms produced a non-integer");
    auto inv = chern_from_k2_e(to_integer(k2), to_integer(e));
    inv.char_p = c.char_p;
    return inv;
}

namespace {

// shared closed form: smooth n-uniform cover of the del Pezzo branched on the
// ten lines, with covering group of the given order
ChernInvariants delpezzo_uniform_invariants(long n, const Int& order) {
    Int nn = n;
    Int k2 = order * 5 * (nn - 2) * (nn - 2) / (nn * nn);
    Int e = order * (2 * nn * nn - 10 * nn + 15) / (nn * nn);
    return chern_from_k2_e(k2, e);
}

} // namespace

ChernInvariants invariants_hk_delpezzo(long n) {
    if (n < 2) throw std::invalid_argument("exponent must be >= 2");
    Int nn = n;
    Int order = nn * nn * nn * nn * nn; // (Z/n)^5
    return delpezzo_uniform_invariants(n, order);
}

BcdhRecord bcdh_invariants(long n) {
    if (n < 2 || std::gcd(n, 6L) != 1)
        throw std::invalid_argument("BCDH surfaces need gcd(n, 6) = 1");
    BcdhRecord rec;
    Int nn = n;
    rec.invariants = delpezzo_uniform_invariants(n, nn * nn);
    rec.base_genus = (n - 1) / 2;
    rec.fibre_genus = n - 1;
    // Zeuthen-Segre with three one-node fibres
    Int expected_e = 4 * Int(rec.fibre_genus - 1) * Int(rec.base_genus - 1) + 3;
    if (rec.invariants.e != expected_e)
        throw std::logic_error("BCDH Euler number fails the Zeuthen-Segre cross-check");
    if (!is_integer(rec.invariants.chi))
        throw std::logic_error("BCDH chi is not integral");
    return rec;
}

CoverSpec cover_from_json(const nlohmann::json& j) {
    CoverSpec spec;
    std::vector<Int> orders;
    for (const auto& o : j.at("group").at("orders")) orders.push_back(Int(o.get<long long>()));
    spec.group = groups::make_group(orders);

    if (j.contains("surface")) {
        if (j.at("surface").get<std::string>() != "delpezzo5")
            throw std::invalid_argument("unknown surface (only 'delpezzo5' is supported)");
        spec.geometry = geometry::delpezzo5();
        const auto& assign = j.at("assignment");
        spec.monodromy.resize(10);
        for (int t = 0; t < 10; ++t) {
            auto [a, b] = geometry::delpezzo_pairs()[t];
            std::string key = std::to_string(a) + std::to_string(b);
            if (!assign.contains(key))
                throw std::invalid_argument("assignment is missing pair \"" + key + "\"");
            std::vector<Int> coords;
            for (const auto& x : assign.at(key)) coords.push_back(Int(x.get<long long>()));
            spec.monodromy[t] = GroupElement(spec.group, std::move(coords));
        }
        return spec;
    }

    const auto& cj = j.at("configuration");
    configs::LineConfiguration cfg =
        cj.is_string() ? configs::builtin(cj.get<std::string>()) : configs::config_from_json(cj);
    spec.geometry = geometry::blowup_plane(cfg);
    const auto& mon = j.at("monodromy");
    if (static_cast<int>(mon.size()) != spec.geometry.line_count)
        throw std::invalid_argument("monodromy must list one element per line (exceptional values are derived)");
    for (const auto& mj : mon) {
        std::vector<Int> coords;
        for (const auto& x : mj) coords.push_back(Int(x.get<long long>()));
        spec.monodromy.emplace_back(spec.group, std::move(coords));
    }
    // exceptional monodromies from the incidence relations
    for (int i = 0; i < spec.geometry.blowup_count; ++i) {
        GroupElement eps = groups::zero(spec.group);
        for (int jline = 0; jline < spec.geometry.line_count; ++jline)
            if (spec.geometry.incidence[jline][i]) eps = groups::add(eps, spec.monodromy[jline]);
        spec.monodromy.push_back(std::move(eps));
    }
    return spec;
}

nlohmann::ordered_json to_json(const CoverSpec& spec) {
    nlohmann::ordered_json j;
    std::vector<long long> orders;
    for (const auto& o : spec.group->orders()) orders.push_back(o.convert_to<long long>());
    j["group"] = {{"orders", orders}};
    auto coords_of = [](const GroupElement& g) {
        std::vector<long long> c;
        for (const auto& x : g.coords) c.push_back(x.convert_to<long long>());
        return c;
    };
    if (spec.geometry.ambient == geometry::Ambient::delpezzo5) {
        j["surface"] = "delpezzo5";
        nlohmann::ordered_json assign;
        for (int t = 0; t < 10; ++t) {
            auto [a, b] = geometry::delpezzo_pairs()[t];
            assign[std::to_string(a) + std::to_string(b)] = coords_of(spec.monodromy[t]);
        }
        j["assignment"] = assign;
    } else {
        nlohmann::ordered_json mon = nlohmann::ordered_json::array();
        for (int t = 0; t < spec.geometry.line_count; ++t) mon.push_back(coords_of(spec.monodromy[t]));
        j["monodromy"] = mon;
        j["lines"] = spec.geometry.line_count;
    }
    return j;
}

} // namespace kummerlab::covers
