#pragma once

#include "kummerlab/rational.hpp"

#include <optional>
#include <vector>

namespace kummerlab::kodaira {

// e(S) of a differentiable fibre bundle with base genus b and fibre genus g
Int bundle_euler(const Int& b, const Int& g);

struct MuResult {
    Int mu;               // e - 4(g-1)(b-1)
    bool nonnegative;     // must hold for honest smooth-minimal fibration data
};
MuResult zeuthen_segre_mu(const Int& e, const Int& b, const Int& g);

struct Feasibility {
    bool feasible = false;
    Rat lower, upper;          // open interval (g-1)(b-1) < chi < (4/3)(g-1)(b-1)
    std::vector<Int> chi_values;
};
// integer chi window for a Kodaira fibration with the given genera (g>=3, b>=2)
Feasibility kodaira_feasibility(const Int& g, const Int& b);

// fibre genus after the n-torsion base change: 1 + (g-1) n^(2g)
Int fibre_genus_scaling(const Int& g, const Int& n);

struct ArakelovDegree {
    Rat degree;               // chi - (g-1)(b-1)
    bool holomorphic_bundle;  // equality case
};
ArakelovDegree arakelov_degree(const Rat& chi, const Int& b, const Int& g);

// smallest integer s with (g/2)(2b-2+s) > deg V; deg V defaults to the
// Arakelov degree chi - (b-1)(g-1) but is exposed directly so the b = 0 and
// b = 1 regimes ride the same code path
Int tan_min_singular_fibres_deg(const Int& b, const Int& g, const Rat& deg_v);
Int tan_min_singular_fibres(const Int& b, const Int& g, const Rat& chi);

// nu_C of a branched cover of B x B along r disjoint graphs of automorphisms,
// with branching orders m_i
Rat very_simple_slope(const Int& b, const std::vector<Int>& m);
// all m_i -> infinity limit: 3 - 2/(2 + r/(b-1))
Rat very_simple_slope_limit(const Int& b, const Int& r);

// slope of the pull-back fibration under a degree-d base change with
// ramification degree r
Rat base_change_slope(const Rat& k2, const Int& g, const Int& b, const Int& d, const Int& r);

struct IsogenousEuler {
    Rat value;     // 4 (g1-1)(g2-1) / |G|
    bool integral; // otherwise no such surface exists
};
IsogenousEuler isogenous_euler(const Int& g1, const Int& g2, const Int& group_order);

struct RigidityTest {
    Rat quantity;  // 10 chi - 2 K^2 + h^0(Theta)
    bool not_rigid;
};
RigidityTest nonrigidity_test(const Rat& chi, const Rat& k2, const Int& h0_theta);

} // namespace kummerlab::kodaira
