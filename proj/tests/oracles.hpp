#pragma once

// Test-only oracles, independent of the library's implementation paths.

#include "kummerlab/search.hpp"
#include "kummerlab/zgroups.hpp"

#include <vector>

namespace oracles {

// h^0 of O(aL - sum m_i E_i) on the blow-up of P^2 at the four points
// (1:0:0), (0:1:0), (0:0:1), (1:1:1): plane curves of degree a with the
// prescribed multiplicities, dimension by exact interpolation (monomial
// support conditions at the coordinate points, a Bareiss rank at (1:1:1)).
long long h0_four_points(long a, long m1, long m2, long m3, long m4);

// subgroup closure by repeated multiplication over explicit element tuples
bool generates_bruteforce(const std::vector<kummerlab::groups::GroupElement>& elems,
                          const kummerlab::groups::GroupHandle& g);

// maximum packing size by exhaustive include/exclude recursion
std::size_t packing_bruteforce(const kummerlab::search::CayleyGroup& g,
                               const std::vector<int>& stabilizers);

} // namespace oracles
