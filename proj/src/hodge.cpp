#include "kummerlab/hodge.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace kummerlab::hodge {

using geometry::Ambient;
using geometry::LatticeVec;

namespace {

void require_eigensheaf_ambient(const covers::CoverSpec& spec) {
    if (spec.geometry.ambient == Ambient::delpezzo5) return;
    if (spec.geometry.ambient == Ambient::plane_blowup && spec.geometry.blowup_count == 0) return;
    throw std::domain_error(
        "eigensheaf cohomology is only available over P^2 (no blow-ups) or the degree-5 del Pezzo");
}

geometry::Cohomology ambient_cohomology(const covers::CoverSpec& spec, const LatticeVec& d) {
    if (spec.geometry.ambient == Ambient::delpezzo5) return geometry::cohomology_delpezzo(d);
    return geometry::cohomology_plane(d[0]);
}

} // namespace

std::vector<CharacterBundle> character_bundles(const covers::CoverSpec& spec) {
    require_eigensheaf_ambient(spec);
    covers::require_valid(spec);
    if (!covers::smoothness_check(spec).smooth)
        throw std::domain_error("character sheaves require a smooth cover");

    const Int n = spec.group->exponent();
    const int rank = spec.geometry.lattice.rank;
    const auto& K = spec.geometry.lattice.canonical;

    std::vector<CharacterBundle> out;
    for (auto& chi : groups::nonzero_characters(spec.group)) {
        LatticeVec acc(rank, 0);
        for (std::size_t c = 0; c < spec.monodromy.size(); ++c) {
            Int r = chi.eval(spec.monodromy[c]);
            for (int t = 0; t < rank; ++t) acc[t] += r * spec.geometry.curves[c].cls[t];
        }
        LatticeVec l(rank);
        for (int t = 0; t < rank; ++t) {
            if (acc[t] % n != 0)
                throw std::domain_error("n L_chi is not divisible by n in the lattice: "
                                        "invalid monodromy assignment");
            l[t] = acc[t] / n;
        }
        CharacterBundle cb;
        cb.chi = chi;
        cb.l_chi = l;
        LatticeVec kl(rank), negl(rank);
        for (int t = 0; t < rank; ++t) {
            kl[t] = K[t] + l[t];
            negl[t] = -l[t];
        }
        cb.h0_canonical_twist = spec.geometry.ambient == Ambient::delpezzo5
                                    ? geometry::h0_delpezzo(kl)
                                    : geometry::h0_plane(kl[0]);
        cb.h1_negative = ambient_cohomology(spec, negl).h1;
        out.push_back(std::move(cb));
    }
    return out;
}

std::pair<Int, Int> irregularity_and_pg(const covers::CoverSpec& spec) {
    Int q = 0, pg = 0;
    for (const auto& cb : character_bundles(spec)) {
        q += cb.h1_negative;
        pg += cb.h0_canonical_twist;
    }
    // 1 - q + p_g must match the Noether chi of the cover
    auto inv = covers::invariants_general(spec);
    if (Rat(1 - q + pg) != inv.chi)
        throw std::logic_error("eigensheaf chi disagrees with the Noether chi");
    return {q, pg};
}

std::vector<CanonicalCharacter> canonical_characters(const covers::CoverSpec& spec) {
    if (spec.geometry.ambient != Ambient::plane_blowup || spec.geometry.blowup_count != 0)
        throw std::domain_error("canonical characters are computed for plane covers");
    const Int n = spec.group->exponent();
    std::vector<CanonicalCharacter> out;
    for (auto& cb : character_bundles(spec)) {
        Int l = cb.l_chi[0];
        Int h0 = geometry::h0_plane(l - 3);
        if (h0 == 0) continue;
        CanonicalCharacter cc;
        cc.chi = cb.chi;
        cc.l_chi = l;
        cc.h0 = h0;
        for (std::size_t j = 0; j < spec.monodromy.size(); ++j)
            cc.z_exponents.push_back(n - 1 - cc.chi.eval(spec.monodromy[j]));
        out.push_back(std::move(cc));
    }
    return out;
}

CyclicQuadrupleCover::CyclicQuadrupleCover(long n_, std::array<long, 4> m_) : n(n_), m(m_) {
    if (n < 4) throw std::invalid_argument("cyclic quadruple cover needs n >= 4");
    long sum = 0;
    for (long mj : m) {
        if (mj <= 0 || mj > n - 3)
            throw std::invalid_argument("each m_j must satisfy 0 < m_j <= n-3");
        if (std::gcd(mj, n) != 1)
            throw std::invalid_argument("m_j must be coprime to n (degenerate residues are not modelled)");
        sum += mj;
    }
    if (sum != n) throw std::invalid_argument("the normalization sum m_j = n is required");
}

std::vector<int> eigen_dims(const CyclicQuadrupleCover& c) {
    std::vector<int> dims;
    for (long i = 1; i < c.n; ++i) {
        long total = 0;
        for (long mj : c.m) {
            long r = (i * mj) % c.n;
            if (r == 0)
                throw std::domain_error("[i m_j] = 0 encountered; outside the gcd precondition");
            total += r;
        }
        long num = total - c.n;
        if (num % c.n != 0) throw std::logic_error("eigenspace dimension is not an integer");
        long dim = num / c.n;
        if (dim < 0 || dim > 2) throw std::logic_error("eigenspace dimension outside {0,1,2}");
        dims.push_back(static_cast<int>(dim));
    }
    // conjugate pairs add to 2
    for (long i = 1; i < c.n; ++i)
        if (dims[i - 1] + dims[c.n - i - 1] != 2)
            throw std::logic_error("conjugate eigenspace dimensions do not sum to 2");
    return dims;
}

FujitaSplit fujita_split(const CyclicQuadrupleCover& c) {
    FujitaSplit out;
    auto dims = eigen_dims(c);
    for (long i = 1; i < c.n; ++i) {
        int dim = dims[i - 1];
        SummandKind kind = dim == 2   ? SummandKind::flat_rank2
                           : dim == 1 ? SummandKind::ample_rank1
                                      : SummandKind::absorbed;
        out.entries.push_back({static_cast<int>(i), dim, kind});
        if (dim == 1) out.rank_ample += 1;
        if (dim == 2) out.flat_characters.push_back(static_cast<int>(i));
    }
    // infinite monodromy (per the sufficient criterion): a flat summand whose
    // Galois conjugate chi_{ij} carries the indefinite (1,1) form
    for (int i : out.flat_characters) {
        for (long j = 1; j < c.n && !out.infinite_monodromy; ++j) {
            if (std::gcd(j, c.n) != 1) continue;
            long t = (static_cast<long>(i) * j) % c.n;
            if (t != 0 && dims[t - 1] == 1) out.infinite_monodromy = true;
        }
        if (out.infinite_monodromy) break;
    }
    return out;
}

Int cyclic_p1_genus(long n, const std::vector<long>& exponents) {
    if (n < 2) throw std::invalid_argument("cover exponent must be >= 2");
    long sum = 0;
    long g = n;
    for (long e : exponents) {
        long r = ((e % n) + n) % n;
        if (r == 0) throw std::invalid_argument("branch exponents must be nonzero mod n");
        sum = (sum + r) % n;
        g = std::gcd(g, r);
    }
    if (sum != 0) throw std::invalid_argument("sum of exponents must vanish mod n (no branching at infinity)");
    if (g != 1) throw std::invalid_argument("disconnected cover: gcd(exponents, n) > 1");
    // Riemann-Hurwitz over P^1: 2g - 2 = -2n + sum_p (n - n/e_p)
    Int rhs = -2 * Int(n);
    for (long e : exponents) {
        long r = ((e % n) + n) % n;
        long ep = n / std::gcd(n, r);
        rhs += Int(n) - Int(n) / ep;
    }
    if ((rhs + 2) % 2 != 0) throw std::logic_error("Riemann-Hurwitz parity failure");
    return (rhs + 2) / 2;
}

} // namespace kummerlab::hodge
