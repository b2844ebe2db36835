#include "kummerlab/detail/snf.hpp"

#include <cstdlib>
#include <stdexcept>

namespace kummerlab::detail {

namespace {

void swap_rows(Matrix& m, std::size_t i, std::size_t j) { std::swap(m[i], m[j]); }

void swap_cols(Matrix& m, std::size_t i, std::size_t j) {
    for (auto& row : m) std::swap(row[i], row[j]);
}

// row[i] += f * row[j]
void add_row(Matrix& m, std::size_t i, std::size_t j, const Int& f) {
    for (std::size_t c = 0; c < m[i].size(); ++c) m[i][c] += f * m[j][c];
}

void add_col(Matrix& m, std::size_t i, std::size_t j, const Int& f) {
    for (auto& row : m) row[i] += f * row[j];
}

void negate_row(Matrix& m, std::size_t i) {
    for (auto& x : m[i]) x = -x;
}

} // namespace

Smith smith_normal_form(Matrix a) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    Smith s;
    s.u = identity(rows);
    s.u_inv = identity(rows);

    // Mirror row ops on u (and inverse ops on u_inv); column ops need no tracking
    // for our uses (quotient coordinates only need U).
    auto row_swap = [&](std::size_t i, std::size_t j) {
        swap_rows(a, i, j);
        swap_rows(s.u, i, j);
        swap_cols(s.u_inv, i, j);
    };
    auto row_add = [&](std::size_t i, std::size_t j, const Int& f) {
        add_row(a, i, j, f);
        add_row(s.u, i, j, f);
        add_col(s.u_inv, j, i, -f);
    };
    auto row_neg = [&](std::size_t i) {
        negate_row(a, i);
        negate_row(s.u, i);
        for (auto& row : s.u_inv) row[i] = -row[i];
    };

    std::size_t t = 0;
    while (t < rows && t < cols) {
        // find a nonzero pivot in the remaining block
        std::size_t pi = t, pj = t;
        bool found = false;
        for (std::size_t i = t; i < rows && !found; ++i)
            for (std::size_t j = t; j < cols && !found; ++j)
                if (a[i][j] != 0) { pi = i; pj = j; found = true; }
        if (!found) break;
        row_swap(t, pi);
        swap_cols(a, t, pj);

        for (;;) {
            // clear column t below the pivot
            bool dirty = false;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (a[i][t] == 0) continue;
                if (a[i][t] % a[t][t] != 0) {
                    // reduce pivot via gcd step
                    Int q = a[i][t] / a[t][t];
                    row_add(i, t, -q);
                    row_swap(t, i);
                    dirty = true;
                } else {
                    row_add(i, t, -(a[i][t] / a[t][t]));
                }
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (a[t][j] == 0) continue;
                if (a[t][j] % a[t][t] != 0) {
                    Int q = a[t][j] / a[t][t];
                    add_col(a, j, t, -q);
                    swap_cols(a, t, j);
                    dirty = true;
                } else {
                    add_col(a, j, t, -(a[t][j] / a[t][t]));
                }
            }
            if (!dirty) break;
        }
        if (a[t][t] < 0) row_neg(t);
        ++t;
    }

    // enforce divisibility chain d1 | d2 | ...
    bool stable = false;
    while (!stable) {
        stable = true;
        for (std::size_t i = 0; t > 0 && i + 1 < t; ++i) {
            for (std::size_t j = i + 1; j < t; ++j) {
                if (a[i][i] != 0 && a[j][j] % a[i][i] == 0) continue;
                stable = false;
                // fold column j into column i (block becomes [[di,0],[dj,dj]]),
                // then a Euclid pass on column i turns the block into diag(g, lcm)
                add_col(a, i, j, 1);
                while (a[j][i] != 0) {
                    Int q = a[i][i] / a[j][i];
                    row_add(i, j, -q);
                    row_swap(i, j);
                }
                if (a[i][j] != 0) add_col(a, j, i, -(a[i][j] / a[i][i]));
                if (a[i][i] < 0) row_neg(i);
                if (a[j][j] < 0) row_neg(j);
            }
        }
    }

    s.d = std::move(a);
    return s;
}

Int subgroup_order(const std::vector<Int>& orders, const std::vector<std::vector<Int>>& gens) {
    const std::size_t k = orders.size();
    Int total = 1;
    for (const auto& n : orders) total *= n;
    // lattice spanned by the generators and the order relations; its index in Z^k
    // is the cokernel order
    Matrix m;
    for (const auto& g : gens) {
        if (g.size() != k) throw std::invalid_argument("generator arity mismatch");
        m.push_back(g);
    }
    for (std::size_t i = 0; i < k; ++i) {
        std::vector<Int> row(k, 0);
        row[i] = orders[i];
        m.push_back(row);
    }
    Smith s = smith_normal_form(std::move(m));
    Int coker = 1;
    auto diag = s.diag();
    if (diag.size() < k) return 0; // cannot happen: relations have full rank
    for (std::size_t i = 0; i < k; ++i) coker *= diag[i];
    return total / coker;
}

} // namespace kummerlab::detail
