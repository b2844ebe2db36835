#pragma once

#include "kummerlab/rational.hpp"

#include <vector>

namespace kummerlab::detail {

using Matrix = std::vector<std::vector<Int>>;

// Smith normal form of an m x n integer matrix A: U*A*V = D with U, V unimodular
// and D diagonal, d1 | d2 | ... (nonnegative). Row/column sizes here are tiny
// (<= #branch curves + 1), so the textbook algorithm is plenty.
struct Smith {
    Matrix d;       // m x n diagonal matrix
    Matrix u;       // m x m
    Matrix u_inv;   // m x m
    std::vector<Int> diag() const {
        std::vector<Int> out;
        const std::size_t k = std::min(d.size(), d.empty() ? 0 : d[0].size());
        for (std::size_t i = 0; i < k; ++i) out.push_back(d[i][i]);
        return out;
    }
};

inline Matrix identity(std::size_t n) {
    Matrix m(n, std::vector<Int>(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

Smith smith_normal_form(Matrix a);

// Order of the subgroup of Z^k / diag(orders) generated by the given coordinate
// vectors: |image| = prod(orders) / |cokernel|, with the cokernel read off a SNF.
Int subgroup_order(const std::vector<Int>& orders, const std::vector<std::vector<Int>>& gens);

} // namespace kummerlab::detail
