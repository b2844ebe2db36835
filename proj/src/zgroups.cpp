#include "kummerlab/zgroups.hpp"

#include "kummerlab/detail/snf.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace kummerlab::groups {

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<Int> orders) : orders_(std::move(orders)) {
    if (orders_.empty()) throw std::invalid_argument("group needs at least one cyclic factor");
    cardinality_ = 1;
    exponent_ = 1;
    for (const auto& n : orders_) {
        if (n < 2) throw std::invalid_argument("cyclic factor order must be >= 2");
        cardinality_ *= n;
        exponent_ = lcm_int(exponent_, n);
    }
}

GroupHandle make_group(std::vector<Int> orders) {
    return std::make_shared<const FiniteAbelianGroup>(std::move(orders));
}

namespace {

std::vector<Int> reduce(const FiniteAbelianGroup& g, std::vector<Int> c) {
    if (c.size() != g.rank()) throw std::invalid_argument("coordinate arity mismatch");
    for (std::size_t i = 0; i < c.size(); ++i) {
        c[i] %= g.orders()[i];
        if (c[i] < 0) c[i] += g.orders()[i];
    }
    return c;
}

void require_same_group(const GroupElement& a, const GroupElement& b) {
    if (!a.group || !b.group || *a.group != *b.group)
        throw std::invalid_argument("elements belong to different groups");
}

} // namespace

GroupElement::GroupElement(GroupHandle g, std::vector<Int> c) : group(std::move(g)) {
    coords = reduce(*group, std::move(c));
}

bool GroupElement::is_zero() const {
    return std::all_of(coords.begin(), coords.end(), [](const Int& x) { return x == 0; });
}

bool GroupElement::operator==(const GroupElement& o) const {
    return coords == o.coords && group && o.group && *group == *o.group;
}

GroupElement zero(const GroupHandle& g) {
    return GroupElement(g, std::vector<Int>(g->rank(), 0));
}

GroupElement add(const GroupElement& a, const GroupElement& b) {
    require_same_group(a, b);
    std::vector<Int> c(a.coords);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.coords[i];
    return GroupElement(a.group, std::move(c));
}

GroupElement neg(const GroupElement& a) {
    std::vector<Int> c(a.coords);
    for (auto& x : c) x = -x;
    return GroupElement(a.group, std::move(c));
}

GroupElement scalar_mul(const Int& k, const GroupElement& a) {
    std::vector<Int> c(a.coords);
    for (auto& x : c) x *= k;
    return GroupElement(a.group, std::move(c));
}

Int element_order(const GroupElement& x) {
    Int ord = 1;
    for (std::size_t i = 0; i < x.coords.size(); ++i) {
        const Int& n = x.group->orders()[i];
        // order of x_i in Z/n is n / gcd(n, x_i)
        Int oi = n / gcd_int(n, x.coords[i]);
        ord = lcm_int(ord, oi);
    }
    return ord;
}

std::set<GroupElement> cyclic_span(const GroupElement& x) {
    std::set<GroupElement> out;
    GroupElement cur = zero(x.group);
    Int ord = element_order(x);
    for (Int k = 0; k < ord; ++k) {
        out.insert(cur);
        cur = add(cur, x);
    }
    return out;
}

bool direct_sum_test(const GroupElement& x, const GroupElement& y) {
    require_same_group(x, y);
    auto sx = cyclic_span(x);
    auto sy = cyclic_span(y);
    for (const auto& e : sx)
        if (!e.is_zero() && sy.count(e)) return false;
    return true;
}

bool generates(const std::vector<GroupElement>& elems, const GroupHandle& g) {
    static const Int kSaturationCap = 1'000'000;
    if (g->cardinality() > kSaturationCap)
        throw std::domain_error("group too large for saturation; use subgroup_order");
    for (const auto& e : elems)
        if (!e.group || *e.group != *g) throw std::invalid_argument("element not in the given group");
    std::set<GroupElement> closure;
    std::deque<GroupElement> frontier;
    closure.insert(zero(g));
    frontier.push_back(zero(g));
    while (!frontier.empty()) {
        GroupElement cur = frontier.front();
        frontier.pop_front();
        for (const auto& e : elems) {
            GroupElement nxt = add(cur, e);
            if (closure.insert(nxt).second) frontier.push_back(nxt);
        }
    }
    return Int(closure.size()) == g->cardinality();
}

Int subgroup_order(const std::vector<GroupElement>& elems, const GroupHandle& g) {
    std::vector<std::vector<Int>> gens;
    for (const auto& e : elems) {
        if (!e.group || *e.group != *g) throw std::invalid_argument("element not in the given group");
        gens.push_back(e.coords);
    }
    return detail::subgroup_order(g->orders(), gens);
}

Character::Character(GroupHandle g, std::vector<Int> c) : group(std::move(g)) {
    coords = reduce(*group, std::move(c));
}

bool Character::is_trivial() const {
    return std::all_of(coords.begin(), coords.end(), [](const Int& x) { return x == 0; });
}

Int Character::eval(const GroupElement& x) const {
    if (!x.group || *x.group != *group) throw std::invalid_argument("character/element group mismatch");
    const Int& N = group->exponent();
    Int acc = 0;
    for (std::size_t i = 0; i < coords.size(); ++i)
        acc += coords[i] * x.coords[i] * (N / group->orders()[i]);
    acc %= N;
    if (acc < 0) acc += N;
    return acc;
}

std::vector<Character> unit_translates(const Character& c) {
    if (c.is_trivial()) throw std::invalid_argument("unit translates of the trivial character");
    const Int& N = c.group->exponent();
    std::vector<Character> out;
    std::set<std::vector<Int>> seen;
    for (Int j = 1; j < N; ++j) {
        if (gcd_int(j, N) != 1) continue;
        std::vector<Int> t(c.coords);
        for (auto& x : t) x *= j;
        Character tc(c.group, std::move(t));
        if (seen.insert(tc.coords).second) out.push_back(std::move(tc));
    }
    return out;
}

std::vector<Character> nonzero_characters(const GroupHandle& g) {
    std::vector<Character> out;
    std::vector<Int> cur(g->rank(), 0);
    for (;;) {
        // increment odometer over the coordinate box
        std::size_t i = g->rank();
        while (i > 0) {
            --i;
            cur[i] += 1;
            if (cur[i] < g->orders()[i]) break;
            cur[i] = 0;
            if (i == 0) return out;
        }
        out.emplace_back(g, cur);
    }
}

} // namespace kummerlab::groups
