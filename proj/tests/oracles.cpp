#include "oracles.hpp"

#include <algorithm>
#include <set>

namespace oracles {

namespace {

using i128 = __int128;

long long binom(long n, long k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (long i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

// rank over Q by fraction-free elimination; entries stay far below the
// __int128 range for the sizes used here (<= 10 rows of binomials <= 400)
int rank_bareiss(std::vector<std::vector<i128>> m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    int rank = 0;
    i128 prev = 1;
    for (std::size_t col = 0; col < cols && static_cast<std::size_t>(rank) < rows; ++col) {
        std::size_t piv = rows;
        for (std::size_t r = rank; r < rows; ++r)
            if (m[r][col] != 0) { piv = r; break; }
        if (piv == rows) continue;
        std::swap(m[rank], m[piv]);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            for (std::size_t c = col + 1; c < cols; ++c)
                m[r][c] = (m[rank][col] * m[r][c] - m[r][col] * m[rank][c]) / prev;
            m[r][col] = 0;
        }
        prev = m[rank][col];
        ++rank;
    }
    return rank;
}

} // namespace

long long h0_four_points(long a, long m1, long m2, long m3, long m4) {
    if (a < 0) return 0;
    m1 = std::max(m1, 0L);
    m2 = std::max(m2, 0L);
    m3 = std::max(m3, 0L);
    m4 = std::max(m4, 0L);
    // multiplicity at a coordinate point kills the monomials of low degree in
    // the other two variables
    struct Mono {
        long i, j, k;
    };
    std::vector<Mono> surviving;
    for (long i = 0; i <= a; ++i)
        for (long j = 0; i + j <= a; ++j) {
            long k = a - i - j;
            if (j + k < m1 || i + k < m2 || i + j < m3) continue;
            surviving.push_back({i, j, k});
        }
    if (m4 == 0) return static_cast<long long>(surviving.size());
    // Taylor conditions at (1:1:1) in the chart z = 1 centred at (1,1):
    // coefficient of u^p v^q in (1+u)^i (1+v)^j is C(i,p) C(j,q)
    std::vector<std::vector<i128>> cond;
    for (long p = 0; p < m4; ++p)
        for (long q = 0; p + q < m4; ++q) {
            std::vector<i128> row;
            for (const auto& mo : surviving) row.push_back(i128(binom(mo.i, p)) * binom(mo.j, q));
            cond.push_back(std::move(row));
        }
    return static_cast<long long>(surviving.size()) - rank_bareiss(std::move(cond));
}

bool generates_bruteforce(const std::vector<kummerlab::groups::GroupElement>& elems,
                          const kummerlab::groups::GroupHandle& g) {
    using kummerlab::groups::GroupElement;
    std::set<GroupElement> closure{kummerlab::groups::zero(g)};
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<GroupElement> snapshot(closure.begin(), closure.end());
        for (const auto& x : snapshot)
            for (const auto& e : elems)
                if (closure.insert(kummerlab::groups::add(x, e)).second) grew = true;
    }
    return kummerlab::Int(closure.size()) == g->cardinality();
}

namespace {

void packing_rec(const kummerlab::search::CayleyGroup& g, const std::vector<bool>& forbidden,
                 std::size_t next, std::vector<int>& chosen, std::size_t& best) {
    if (chosen.size() + (g.order() - next) <= best) return;
    if (next == static_cast<std::size_t>(g.order())) {
        best = std::max(best, chosen.size());
        return;
    }
    int v = static_cast<int>(next);
    bool ok = true;
    for (int c : chosen)
        if (forbidden[g.mul(g.inv(c), v)]) { ok = false; break; }
    if (ok) {
        chosen.push_back(v);
        packing_rec(g, forbidden, next + 1, chosen, best);
        chosen.pop_back();
    }
    packing_rec(g, forbidden, next + 1, chosen, best);
}

} // namespace

std::size_t packing_bruteforce(const kummerlab::search::CayleyGroup& g,
                               const std::vector<int>& stabilizers) {
    std::vector<bool> forbidden(g.order(), false);
    for (int s : stabilizers)
        if (s != g.identity()) forbidden[s] = true;
    std::vector<int> chosen;
    std::size_t best = 0;
    packing_rec(g, forbidden, 0, chosen, best);
    return best;
}

} // namespace oracles
