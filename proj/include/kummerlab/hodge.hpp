#pragma once

#include "kummerlab/covers.hpp"

#include <array>
#include <utility>
#include <vector>

namespace kummerlab::hodge {

// eigensheaf data of one nontrivial character: p_* O_S = O_Y + sum O_Y(-L_chi)
struct CharacterBundle {
    groups::Character chi;
    geometry::LatticeVec l_chi;    // n L_chi = sum_j [chi(g_j)] D_j
    Int h0_canonical_twist;        // h^0(K_Y + L_chi)
    Int h1_negative;               // h^1(-L_chi)
};

// smooth covers of P^2 (no blow-ups) or of the degree-5 del Pezzo
std::vector<CharacterBundle> character_bundles(const covers::CoverSpec& spec);

// q = sum h^1(-L_chi), p_g = sum h^0(K_Y + L_chi); checked against Noether chi
std::pair<Int, Int> irregularity_and_pg(const covers::CoverSpec& spec);

struct CanonicalCharacter {
    groups::Character chi;
    Int l_chi;                      // plane degree
    std::vector<Int> z_exponents;   // exponent n-1-[chi(g_j)] of the j-th ramification divisor
    Int h0;                         // h^0(O(-3 + L_chi))
};

// plane covers: the characters contributing to H^0(K_S), with the monomial
// factor z_chi written out on the ramification divisors
std::vector<CanonicalCharacter> canonical_characters(const covers::CoverSpec& spec);

// z^n = y0^m0 y1^m1 (y1-y0)^m2 (y1-x y0)^m3 with sum m_j = n, 0 < m_j <= n-3,
// gcd(m_j, n) = 1
struct CyclicQuadrupleCover {
    long n;
    std::array<long, 4> m;
    CyclicQuadrupleCover(long n_, std::array<long, 4> m_);
};

// dim V^{chi_i} = (1/n)([i m0] + [i m1] + [i m2] + [i m3] - n), i = 1..n-1
std::vector<int> eigen_dims(const CyclicQuadrupleCover& c);

enum class SummandKind { flat_rank2, ample_rank1, absorbed };

struct FujitaSplit {
    struct Entry {
        int character;  // i of chi_i
        int dim;        // dim V^{chi_i}
        SummandKind kind;
    };
    std::vector<Entry> entries;
    int rank_ample = 0;
    std::vector<int> flat_characters; // i with dim V^{chi_i} = 2
    bool infinite_monodromy = false;  // per the Galois-conjugate indefiniteness criterion
};

FujitaSplit fujita_split(const CyclicQuadrupleCover& c);

// genus of the cyclic cover w^n = prod (x - p_j)^{e_j} of P^1, no branching at
// infinity (sum e_j = 0 mod n), connected (gcd(e_j, n) = 1)
Int cyclic_p1_genus(long n, const std::vector<long>& exponents);

} // namespace kummerlab::hodge
