#include "kummerlab/geometry.hpp"

#include <algorithm>
#include <stdexcept>

namespace kummerlab::geometry {

Int PicardLattice::dot(const LatticeVec& a, const LatticeVec& b) const {
    if (static_cast<int>(a.size()) != rank || static_cast<int>(b.size()) != rank)
        throw std::invalid_argument("lattice vector has wrong rank");
    Int s = a[0] * b[0];
    for (int i = 1; i < rank; ++i) s -= a[i] * b[i];
    return s;
}

BranchGeometry blowup_plane(const configs::LineConfiguration& c) {
    configs::require_valid(c);
    const auto st = configs::stats(c);
    const int r = c.r, k = st.k;

    BranchGeometry g;
    g.ambient = Ambient::plane_blowup;
    g.line_count = r;
    g.blowup_count = k;
    g.char_p = c.char_p;
    g.lattice.rank = 1 + k;
    g.lattice.euler = 3 + k;
    g.lattice.canonical.assign(1 + k, 1);
    g.lattice.canonical[0] = -3;

    g.incidence.assign(r, std::vector<int>(k, 0));
    for (int i = 0; i < k; ++i)
        for (int j : c.points[i].lines) g.incidence[j][i] = 1;

    // strict transforms D_j = L - sum_i a_{j,i} E_i
    for (int j = 0; j < r; ++j) {
        BranchCurve bc;
        bc.cls.assign(1 + k, 0);
        bc.cls[0] = 1;
        for (int i = 0; i < k; ++i) bc.cls[1 + i] = -g.incidence[j][i];
        bc.label = "D" + std::to_string(j + 1);
        g.curves.push_back(std::move(bc));
    }
    // exceptionals
    for (int i = 0; i < k; ++i) {
        BranchCurve bc;
        bc.cls.assign(1 + k, 0);
        bc.cls[1 + i] = 1;
        bc.label = "E" + std::to_string(i + 1);
        g.curves.push_back(std::move(bc));
    }

    // nodes: line/exceptional incidences plus the residual double points of
    // pairs of lines not separated by a blow-up
    for (int j = 0; j < r; ++j)
        for (int i = 0; i < k; ++i)
            if (g.incidence[j][i]) g.nodes.emplace_back(j, r + i);
    for (int j1 = 0; j1 < r; ++j1)
        for (int j2 = j1 + 1; j2 < r; ++j2) {
            bool separated = false;
            for (int i = 0; i < k; ++i)
                if (g.incidence[j1][i] && g.incidence[j2][i]) separated = true;
            if (!separated) g.nodes.emplace_back(j1, j2);
        }

    // open Euler numbers: rational curves minus their crossings
    std::vector<int> touches(g.curves.size(), 0);
    for (const auto& [a, b] : g.nodes) {
        ++touches[a];
        ++touches[b];
    }
    for (std::size_t ci = 0; ci < g.curves.size(); ++ci)
        g.curves[ci].open_euler = 2 - touches[ci];
    return g;
}

const std::array<std::pair<int, int>, 10>& delpezzo_pairs() {
    static const std::array<std::pair<int, int>, 10> pairs = {{
        {1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}, {3, 4}, {3, 5}, {4, 5},
    }};
    return pairs;
}

int delpezzo_pair_index(int i, int j) {
    if (i > j) std::swap(i, j);
    const auto& ps = delpezzo_pairs();
    for (int t = 0; t < 10; ++t)
        if (ps[t] == std::make_pair(i, j)) return t;
    throw std::invalid_argument("not a 2-subset of {1..5}");
}

const LatticeVec& delpezzo_class(int pair_index) {
    static const std::vector<LatticeVec> classes = [] {
        std::vector<LatticeVec> out(10);
        for (int t = 0; t < 10; ++t) {
            auto [i, j] = delpezzo_pairs()[t];
            LatticeVec v(5, 0);
            if (j == 5) {
                v[i] = 1; // E_{i,5} is the exceptional over P_i
            } else {
                // E_{i,j} is the strict transform of the line through the
                // complementary pair of points
                v[0] = 1;
                for (int h = 1; h <= 4; ++h)
                    if (h != i && h != j) v[h] = -1;
            }
            out[t] = std::move(v);
        }
        return out;
    }();
    return classes.at(pair_index);
}

BranchGeometry delpezzo5() {
    BranchGeometry g;
    g.ambient = Ambient::delpezzo5;
    g.lattice.rank = 5;
    g.lattice.euler = 7;
    g.lattice.canonical = {-3, 1, 1, 1, 1};
    for (int t = 0; t < 10; ++t) {
        auto [i, j] = delpezzo_pairs()[t];
        BranchCurve bc;
        bc.cls = delpezzo_class(t);
        bc.open_euler = -1; // each line meets exactly three others
        bc.label = "E" + std::to_string(i) + std::to_string(j);
        g.curves.push_back(std::move(bc));
    }
    for (int a = 0; a < 10; ++a)
        for (int b = a + 1; b < 10; ++b) {
            auto [i, j] = delpezzo_pairs()[a];
            auto [h, k] = delpezzo_pairs()[b];
            if (i != h && i != k && j != h && j != k) g.nodes.emplace_back(a, b);
        }
    return g;
}

LatticeVec s5_act(const std::array<int, 5>& perm, const LatticeVec& d) {
    if (d.size() != 5) throw std::invalid_argument("del Pezzo lattice vector has rank 5");
    // images of the basis: E_i = class of {i,5}; L = E_{1,2} + E_3 + E_4
    auto image_of_pair = [&](int i, int j) {
        return delpezzo_class(delpezzo_pair_index(perm[i - 1], perm[j - 1]));
    };
    std::array<LatticeVec, 5> basis_im;
    for (int i = 1; i <= 4; ++i) basis_im[i] = image_of_pair(i, 5);
    LatticeVec lim(5, 0);
    const auto l12 = image_of_pair(1, 2);
    for (int t = 0; t < 5; ++t) lim[t] = l12[t] + basis_im[3][t] + basis_im[4][t];
    basis_im[0] = lim;
    LatticeVec out(5, 0);
    for (int t = 0; t < 5; ++t)
        for (int c = 0; c < 5; ++c) out[c] += d[t] * basis_im[t][c];
    return out;
}

Int h0_plane(const Int& degree) {
    if (degree < 0) return 0;
    return (degree + 2) * (degree + 1) / 2;
}

Cohomology cohomology_plane(const Int& degree) {
    return {h0_plane(degree), Int(0), h0_plane(-degree - 3)};
}

namespace {
const PicardLattice& dp5_lattice() {
    static const PicardLattice lat{5, {-3, 1, 1, 1, 1}, 7};
    return lat;
}
} // namespace

Int h0_delpezzo(const LatticeVec& d0) {
    const auto& lat = dp5_lattice();
    LatticeVec d = d0;
    for (;;) {
        if (std::all_of(d.begin(), d.end(), [](const Int& x) { return x == 0; }))
            return 1;
        if (-lat.dot(d, lat.canonical) < 0) return 0;
        int violating = -1;
        for (int t = 0; t < 10; ++t)
            if (lat.dot(d, delpezzo_class(t)) < 0) { violating = t; break; }
        if (violating < 0) {
            // nef against the ten lines, which generate the effective cone
            Int chi2 = lat.self(d) - lat.dot(d, lat.canonical);
            return 1 + chi2 / 2;
        }
        const auto& e = delpezzo_class(violating);
        for (int t = 0; t < 5; ++t) d[t] -= e[t];
        // each subtraction lowers D.(-K) by one, so this terminates
    }
}

Cohomology cohomology_delpezzo(const LatticeVec& d) {
    const auto& lat = dp5_lattice();
    Cohomology c;
    c.h0 = h0_delpezzo(d);
    LatticeVec kd(5);
    for (int t = 0; t < 5; ++t) kd[t] = lat.canonical[t] - d[t];
    c.h2 = h0_delpezzo(kd);
    Rat chi = 1 + Rat(lat.self(d) - lat.dot(d, lat.canonical), 2);
    Rat h1 = c.h0 + c.h2 - chi;
    if (!is_integer(h1) || h1 < 0)
        throw std::logic_error("h1 consistency failure on the del Pezzo (h0 algorithm bug)");
    c.h1 = to_integer(h1);
    return c;
}

} // namespace kummerlab::geometry
