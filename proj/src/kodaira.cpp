#include "kummerlab/kodaira.hpp"

#include <stdexcept>

namespace kummerlab::kodaira {

Int bundle_euler(const Int& b, const Int& g) { return 4 * (g - 1) * (b - 1); }

MuResult zeuthen_segre_mu(const Int& e, const Int& b, const Int& g) {
    Int mu = e - bundle_euler(b, g);
    return {mu, mu >= 0};
}

Feasibility kodaira_feasibility(const Int& g, const Int& b) {
    if (g < 3 || b < 2)
        throw std::invalid_argument("Kodaira fibrations need g >= 3 and b >= 2");
    Feasibility f;
    Int p = (g - 1) * (b - 1);
    f.lower = Rat(p);
    f.upper = Rat(4 * p, 3);
    for (Int chi = p + 1; Rat(chi) < f.upper; ++chi) f.chi_values.push_back(chi);
    f.feasible = !f.chi_values.empty();
    return f;
}

Int fibre_genus_scaling(const Int& g, const Int& n) {
    if (g < 2 || n < 1) throw std::invalid_argument("need g >= 2 and n >= 1");
    Int pw = 1;
    for (Int i = 0; i < 2 * g; ++i) pw *= n;
    return 1 + (g - 1) * pw;
}

ArakelovDegree arakelov_degree(const Rat& chi, const Int& b, const Int& g) {
    Rat deg = chi - Rat((g - 1) * (b - 1));
    return {deg, deg == 0};
}

Int tan_min_singular_fibres_deg(const Int& b, const Int& g, const Rat& deg_v) {
    if (g < 1) throw std::invalid_argument("fibre genus must be >= 1");
    // (g/2)(2b - 2 + s) > deg  <=>  s > 2 deg/g - 2b + 2
    Rat threshold = 2 * deg_v / Rat(g) - Rat(2 * b - 2);
    Int s = numerator(threshold) >= 0 ? numerator(threshold) / denominator(threshold) + 1 : Int(0);
    while (Rat(s) <= threshold) ++s; // strictness when the threshold is an integer
    if (s < 0) s = 0;
    return s;
}

Int tan_min_singular_fibres(const Int& b, const Int& g, const Rat& chi) {
    return tan_min_singular_fibres_deg(b, g, chi - Rat((b - 1) * (g - 1)));
}

Rat very_simple_slope(const Int& b, const std::vector<Int>& m) {
    if (b < 2) throw std::invalid_argument("base genus must be >= 2");
    Rat num = 0, den = Rat(2 * (b - 1));
    for (const auto& mi : m) {
        if (mi < 2) throw std::invalid_argument("branching orders must be >= 2");
        num += Rat(mi * mi - 1, mi * mi);
        den += Rat(mi - 1, mi);
    }
    return 2 + num / den;
}

Rat very_simple_slope_limit(const Int& b, const Int& r) {
    if (b < 2 || r < 0) throw std::invalid_argument("need b >= 2 and r >= 0");
    Rat alpha(r, b - 1);
    return 3 - 2 / (2 + alpha);
}

Rat base_change_slope(const Rat& k2, const Int& g, const Int& b, const Int& d, const Int& r) {
    if (d < 1 || r < 0 || g < 2 || b < 2)
        throw std::invalid_argument("need d >= 1, r >= 0, g >= 2, b >= 2");
    Rat rd(r, d);
    Rat num = k2 + 4 * rd * Rat(g - 1);
    Rat den = 4 * Rat(g - 1) * (Rat(b - 1) + rd / 2);
    Rat out = num / den;
    // ramified base change strictly decreases the slope above the Arakelov line
    if (r > 0 && k2 > Rat(8 * (b - 1) * (g - 1))) {
        Rat original = k2 / Rat(4 * (g - 1) * (b - 1));
        if (!(out < original)) throw std::logic_error("base-change slope failed to decrease");
    }
    return out;
}

IsogenousEuler isogenous_euler(const Int& g1, const Int& g2, const Int& group_order) {
    if (g1 < 2 || g2 < 2 || group_order < 1)
        throw std::invalid_argument("need g1, g2 >= 2 and a positive group order");
    Rat v = Rat(4 * (g1 - 1) * (g2 - 1), group_order);
    return {v, is_integer(v)};
}

RigidityTest nonrigidity_test(const Rat& chi, const Rat& k2, const Int& h0_theta) {
    Rat q = 10 * chi - 2 * k2 + Rat(h0_theta);
    return {q, q > 0};
}

} // namespace kummerlab::kodaira
