#pragma once

#include "kummerlab/rational.hpp"

#include <memory>
#include <set>
#include <vector>

namespace kummerlab::groups {

// Direct sum of cyclic groups Z/n1 + ... + Z/nk. Immutable; shared by handle so
// elements stay cheap to copy.
class FiniteAbelianGroup {
public:
    explicit FiniteAbelianGroup(std::vector<Int> orders);

    const std::vector<Int>& orders() const { return orders_; }
    std::size_t rank() const { return orders_.size(); }
    const Int& cardinality() const { return cardinality_; }
    const Int& exponent() const { return exponent_; }

    bool operator==(const FiniteAbelianGroup& o) const { return orders_ == o.orders_; }
    bool operator!=(const FiniteAbelianGroup& o) const { return !(*this == o); }

private:
    std::vector<Int> orders_;
    Int cardinality_;
    Int exponent_;
};

using GroupHandle = std::shared_ptr<const FiniteAbelianGroup>;

GroupHandle make_group(std::vector<Int> orders);

struct GroupElement {
    GroupHandle group;
    std::vector<Int> coords; // reduced: coords[i] in [0, n_i)

    GroupElement() = default;
    GroupElement(GroupHandle g, std::vector<Int> c);

    bool is_zero() const;
    bool operator==(const GroupElement& o) const;
    bool operator!=(const GroupElement& o) const { return !(*this == o); }
    bool operator<(const GroupElement& o) const { return coords < o.coords; }
};

GroupElement zero(const GroupHandle& g);
GroupElement add(const GroupElement& a, const GroupElement& b);
GroupElement neg(const GroupElement& a);
GroupElement scalar_mul(const Int& k, const GroupElement& a);

// least m >= 1 with m*x = 0
Int element_order(const GroupElement& x);

// {0, x, 2x, ..., (ord-1)x}
std::set<GroupElement> cyclic_span(const GroupElement& x);

// span(x) and span(y) intersect only in 0 (the inertia direct-sum condition)
bool direct_sum_test(const GroupElement& x, const GroupElement& y);

// closure by repeated addition (breadth-first saturation); throws if the group
// cardinality exceeds the saturation envelope (~10^6)
bool generates(const std::vector<GroupElement>& elems, const GroupHandle& g);

// exact order of <elems> for groups of any size (structure-based; used where
// saturation is out of the question, e.g. maximal Kummer covers)
Int subgroup_order(const std::vector<GroupElement>& elems, const GroupHandle& g);

// Characters of the group, stored in the same coordinate representation
// (dual group identified with the group). Evaluation lands in Z/exponent:
// chi(x) = sum_i a_i x_i (N/n_i) mod N, which reduces to sum a_i x_i mod n on
// uniform groups (Z/n)^k.
struct Character {
    GroupHandle group;
    std::vector<Int> coords;

    Character() = default;
    Character(GroupHandle g, std::vector<Int> c);

    bool is_trivial() const;
    Int eval(const GroupElement& x) const; // residue in [0, exponent)
    bool operator==(const Character& o) const { return coords == o.coords; }
    bool operator<(const Character& o) const { return coords < o.coords; }
};

// Galois-conjugate set {j*c : gcd(j, exponent) = 1}, deduplicated, in ascending
// order of the least j producing each translate. Errors on the trivial character.
std::vector<Character> unit_translates(const Character& c);

// all characters, nonzero ones only, in ascending coordinate order
std::vector<Character> nonzero_characters(const GroupHandle& g);

} // namespace kummerlab::groups
