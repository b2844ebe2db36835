#pragma once

#include "kummerlab/covers.hpp"
#include "kummerlab/rational.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace kummerlab::search {

// monodromy assignment on the ten lines of the degree-5 del Pezzo with values
// in (Z/n)^2, stored in the geometry::delpezzo_pairs() order
struct DelPezzoAssignment {
    std::array<std::array<int, 2>, 10> v;

    bool operator==(const DelPezzoAssignment& o) const { return v == o.v; }
    bool operator<(const DelPezzoAssignment& o) const { return v < o.v; }
};

covers::CoverSpec assignment_cover(const DelPezzoAssignment& a, int n);

struct EnumerationResult {
    int n = 0;
    int kernel_dim = 0; // per-coordinate solution-space dimension of the relation system
    std::vector<DelPezzoAssignment> admissible; // sorted
};

// all admissible assignments: relation-system solutions with nonzero generating
// values that are independent at each of the 15 nodes. n prime; full
// enumeration is exponential, v1 supports n in {2, 3, 5, 7}.
EnumerationResult enumerate_assignments(int n);

// the assignment determined by values on the six plane lines in the order
// L12, L13, L14, L23, L24, L34 (strict transforms; exceptional values follow
// from the incidence relations); nullopt when the sum is nonzero
std::optional<DelPezzoAssignment> assignment_from_line_values(
    const std::array<std::array<int, 2>, 6>& g, int n);

struct OrbitInfo {
    DelPezzoAssignment representative; // lexicographic minimum of the orbit
    std::size_t size = 0;
    covers::ChernInvariants invariants;
    Int q, pg;
};

struct OrbitClassification {
    int n = 0;
    int kernel_dim = 0;
    std::size_t admissible_count = 0;
    std::vector<OrbitInfo> orbits; // sorted by representative
    // filled when requested: admissible assignment -> index into orbits
    std::map<DelPezzoAssignment, std::size_t> membership;
};

// partition of the admissible set under GL(2, Z/n) x S5
OrbitClassification classify_orbits(int n, bool keep_membership = false);

// ---- Beauville structures on (Z/n)^2 ----

using Vec2 = std::array<long, 2>;

struct Triple {
    std::array<Vec2, 3> e; // a + b + c = 0, generating
};

struct BeauvilleDatum {
    Triple t1, t2;
};

struct BeauvilleResult {
    long n = 0;
    // canonical witnesses: first triple normalized to ((1,0),(0,1),(-1,-1)),
    // second triple minimal under the residual symmetry
    std::vector<BeauvilleDatum> witnesses;
    bool exhaustive = true;
};

BeauvilleResult beauville_search(long n);

// independent check used by tests and reports: no nonzero element lies in both
// stabilizer-set unions
bool beauville_free(const BeauvilleDatum& d, long n);

// ---- generic finite groups through Cayley tables ----

class CayleyGroup {
public:
    explicit CayleyGroup(std::vector<std::vector<int>> table);

    int order() const { return static_cast<int>(table_.size()); }
    int identity() const { return identity_; }
    int mul(int a, int b) const { return table_[a][b]; }
    int inv(int a) const { return inverse_[a]; }

private:
    std::vector<std::vector<int>> table_;
    std::vector<int> inverse_;
    int identity_ = -1;
};

struct PackingProblem {
    CayleyGroup group;
    std::vector<int> stabilizers; // symmetric, conjugation-closed; identity ignored
};

void validate_stabilizer_set(const CayleyGroup& g, const std::vector<int>& s);

enum class PackingMode { exact, greedy };

struct PackingResult {
    std::vector<int> elements;
    std::size_t r = 0;
    PackingMode mode = PackingMode::exact;
};

// maximum (exact) or maximal (greedy) set with pairwise differences outside
// the stabilizer set; exact mode is a max-clique search restricted to |G| <= 5000
PackingResult sphere_packing(const PackingProblem& p, PackingMode mode);

struct EmbeddingReport {
    bool embeds = false;
    std::vector<std::string> warnings; // e.g. subgroup does not act freely
};

// H2 (H1 minus identity) disjoint from the stabilizer set
EmbeddingReport embedding_check(const CayleyGroup& h, const std::vector<int>& h1,
                                const std::vector<int>& h2, const std::vector<int>& s);

struct PolygonalType {
    bool hyperbolic = false;
    Rat angle_defect;       // sum (1 - 1/n_i) - 2
    Int base_genus;         // from 2(b-1) = |G| (sum(1 - 1/n_i) - 2)
    Int hurwitz_bound;      // 84 (b-1), quoted for b >= 2
};

PolygonalType polygonal_type(const std::vector<long>& orders, const Int& group_order);

} // namespace kummerlab::search
