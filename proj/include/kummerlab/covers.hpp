#pragma once

#include "kummerlab/configs.hpp"
#include "kummerlab/geometry.hpp"
#include "kummerlab/zgroups.hpp"

#include <nlohmann/json_fwd.hpp>
#include <optional>
#include <string>
#include <vector>

namespace kummerlab::covers {

// An Abelian cover of a branch geometry: one monodromy element per branch
// curve. The elements must generate, and must satisfy the homology relations
// of the complement: for every lattice class A, sum_c (A . D_c) g_c = 0.
// In the plane model these are exactly  sum_j m_j g_j = 0  and
// eps_i = sum_j a_{j,i} g_j ; on the del Pezzo they say each line's value is
// the sum of the values on the three lines disjoint from it.
struct CoverSpec {
    geometry::BranchGeometry geometry;
    groups::GroupHandle group;
    std::vector<groups::GroupElement> monodromy;
};

std::vector<std::string> validate(const CoverSpec& spec);
void require_valid(const CoverSpec& spec);

struct ChernFlags {
    bool positive_index = false;
    bool bmy_satisfied = false;
    bool bmy_violated = false;
    bool ball_quotient = false; // nu_C = 3
    bool bidisk_slope = false;  // nu_C = 2
};

struct ChernInvariants {
    Int K2, e;
    Rat chi, sigma;
    std::optional<Rat> nu;  // K2/chi, absent when chi = 0
    std::optional<Rat> nuC; // K2/e,  absent when e = 0
    ChernFlags flags;
    std::optional<int> char_p; // realizability tag passthrough
};

// Noether, signature and slope bookkeeping from exact (K2, e).
ChernInvariants chern_from_k2_e(const Int& k2, const Int& e);

struct SmoothnessReport {
    struct NodeVerdict {
        int curve_a, curve_b;
        bool direct_sum;
    };
    std::vector<NodeVerdict> nodes;
    bool smooth = true;
};

// direct-sum test of the two inertia subgroups at every node
SmoothnessReport smoothness_check(const CoverSpec& spec);

struct MaximalCover {
    CoverSpec spec;
    bool already_maximal = false;
    // images in the original group of the standard generators of G''
    std::vector<groups::GroupElement> surjection;
};

// the cover with group G'' = (direct sum of Z/d_j) / <sum_j m_j g''_j> and
// tautological line monodromy; exceptional monodromies follow from the
// incidence relations
MaximalCover maximal_cover(const CoverSpec& spec);

// stratified Chern-number computation for any smooth cover
ChernInvariants invariants_general(const CoverSpec& spec);

// closed forms for the exponent-n Kummer cover branched on a line configuration
ChernInvariants invariants_kummer_plane(const configs::LineConfiguration& c, long n);

// closed forms for the exponent-n Kummer cover of the degree-5 del Pezzo
// branched on its ten lines
ChernInvariants invariants_hk_delpezzo(long n);

struct BcdhRecord {
    ChernInvariants invariants;
    long base_genus = 0;
    long fibre_genus = 0;
    int singular_fibres = 3;
};

// the (Z/n)^2 covers of the del Pezzo, gcd(n,6) = 1: Albanese fibration data
BcdhRecord bcdh_invariants(long n);

// tautological maximal uniform cover of a plane configuration
CoverSpec kummer_plane_spec(const configs::LineConfiguration& c, long n);

// cover spec files: {"configuration": name|object, "group": {"orders": [...]},
// "monodromy": [[..], ..]}  (one entry per line; exceptional monodromies are
// derived), or {"surface": "delpezzo5", "group": ..., "assignment": {"12": [a,b], ...}}
CoverSpec cover_from_json(const nlohmann::json& j);
nlohmann::ordered_json to_json(const CoverSpec& spec);

} // namespace kummerlab::covers
