#pragma once

#include "kummerlab/configs.hpp"
#include "kummerlab/rational.hpp"

#include <array>
#include <string>
#include <utility>
#include <vector>

namespace kummerlab::geometry {

using LatticeVec = std::vector<Int>;

// Intersection lattice of the ambient rational surface. For everything built
// here the form is diag(1, -1, ..., -1) in the basis (L, E_1, ..., E_k).
struct PicardLattice {
    int rank = 1;
    LatticeVec canonical; // K_Y
    int euler = 3;        // e(Y)

    Int dot(const LatticeVec& a, const LatticeVec& b) const;
    Int self(const LatticeVec& a) const { return dot(a, a); }
};

struct BranchCurve {
    LatticeVec cls;
    int genus = 0;      // all curves here are rational; kept explicit for the record
    int open_euler = 0; // e(curve minus its nodes)
    std::string label;
};

enum class Ambient { plane_blowup, delpezzo5 };

struct BranchGeometry {
    Ambient ambient = Ambient::plane_blowup;
    PicardLattice lattice;
    std::vector<BranchCurve> curves;
    std::vector<std::pair<int, int>> nodes; // one entry per transverse crossing
    // plane case bookkeeping: curves[0..r) are the strict transforms,
    // curves[r..r+k) the exceptionals; a[j][i] is the line/point incidence
    int line_count = 0;
    int blowup_count = 0;
    std::vector<std::vector<int>> incidence;
    std::optional<int> char_p; // propagated from the configuration
};

// blow up the multiple points of a configuration; branch divisor = strict
// transforms plus exceptionals, with open Euler numbers from the stratification
BranchGeometry blowup_plane(const configs::LineConfiguration& c);

// the degree-5 del Pezzo with its ten lines as branch divisor
BranchGeometry delpezzo5();

// index pairs {i,j} of {1..5} labelling the ten lines, in lexicographic order
const std::array<std::pair<int, int>, 10>& delpezzo_pairs();
int delpezzo_pair_index(int i, int j);
// class of E_{i,j} in the basis (L, E_1..E_4)
const LatticeVec& delpezzo_class(int pair_index);

// induced lattice action of a permutation of {1..5} (Aut(Y) = S5)
LatticeVec s5_act(const std::array<int, 5>& perm, const LatticeVec& d);

struct Cohomology {
    Int h0, h1, h2;
};

// h^0 on the del Pezzo by fixed-part reduction against the ten (-1)-classes:
// subtract any class meeting D negatively; halt at D = 0 (1), D.(-K) < 0 (0),
// or D nef against the ten lines (chi(D), vanishing since -K is ample).
Int h0_delpezzo(const LatticeVec& d);
Cohomology cohomology_delpezzo(const LatticeVec& d);

// P^2 closed forms: h^0(O(d)) = C(d+2,2) for d >= 0, h^1 = 0, h^2 by duality
Int h0_plane(const Int& degree);
Cohomology cohomology_plane(const Int& degree);

} // namespace kummerlab::geometry
