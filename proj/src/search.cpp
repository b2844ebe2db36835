#include "kummerlab/search.hpp"

#include "kummerlab/hodge.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>

namespace kummerlab::search {

namespace {

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// the six plane lines L_{ij} (through P_i and P_j, i<j<=4); the strict
// transform of L_{ij} is the class E_{hk} of the complementary pair
struct PlaneModel {
    std::array<std::pair<int, int>, 6> lines = {{{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}};
    std::array<int, 6> class_index;   // ten-pair index of each strict transform
    std::array<int, 4> except_index;  // ten-pair index of E_{i,5}

    PlaneModel() {
        for (int t = 0; t < 6; ++t) {
            auto [i, j] = lines[t];
            int h = 0, k = 0;
            for (int x = 1, c = 0; x <= 4; ++x)
                if (x != i && x != j) (c++ ? k : h) = x;
            class_index[t] = geometry::delpezzo_pair_index(h, k);
        }
        for (int i = 1; i <= 4; ++i) except_index[i - 1] = geometry::delpezzo_pair_index(i, 5);
    }
};

const PlaneModel& plane_model() {
    static const PlaneModel m;
    return m;
}

inline bool indep(const std::array<int, 2>& u, const std::array<int, 2>& w, int n) {
    return (u[0] * w[1] - u[1] * w[0]) % n != 0;
}

inline bool is_zero(const std::array<int, 2>& u) { return u[0] == 0 && u[1] == 0; }

// rank over Z/n (n prime) of the homology relation system on the ten unknowns:
// for each pair {h,k}: v(hk) = sum of v over the three disjoint pairs
int relation_kernel_dim(int n) {
    std::array<std::array<int, 10>, 10> rows{};
    for (int a = 0; a < 10; ++a) {
        auto [i, j] = geometry::delpezzo_pairs()[a];
        rows[a][a] = (n - 1) % n; // -1
        for (int b = 0; b < 10; ++b) {
            if (b == a) continue;
            auto [h, k] = geometry::delpezzo_pairs()[b];
            if (h != i && h != j && k != i && k != j) rows[a][b] = 1;
        }
    }
    int rank = 0;
    for (int col = 0; col < 10 && rank < 10; ++col) {
        int piv = -1;
        for (int r2 = rank; r2 < 10; ++r2)
            if (rows[r2][col] % n != 0) { piv = r2; break; }
        if (piv < 0) continue;
        std::swap(rows[rank], rows[piv]);
        // normalize and eliminate (n prime: invert by Fermat)
        long inv = 1, base = rows[rank][col] % n, ex = n - 2;
        while (ex) {
            if (ex & 1) inv = inv * base % n;
            base = base * base % n;
            ex >>= 1;
        }
        for (int c = 0; c < 10; ++c) rows[rank][c] = static_cast<int>(rows[rank][c] * inv % n);
        for (int r2 = 0; r2 < 10; ++r2) {
            if (r2 == rank || rows[r2][col] % n == 0) continue;
            int f = rows[r2][col] % n;
            for (int c = 0; c < 10; ++c)
                rows[r2][c] = ((rows[r2][c] - f * rows[rank][c]) % n + n) % n;
        }
        ++rank;
    }
    return 10 - rank;
}

} // namespace

covers::CoverSpec assignment_cover(const DelPezzoAssignment& a, int n) {
    covers::CoverSpec spec;
    spec.geometry = geometry::delpezzo5();
    spec.group = groups::make_group({Int(n), Int(n)});
    for (int t = 0; t < 10; ++t)
        spec.monodromy.emplace_back(spec.group, std::vector<Int>{Int(a.v[t][0]), Int(a.v[t][1])});
    return spec;
}

namespace {

unsigned thread_cap() {
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("KUMMERLAB_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1 && static_cast<unsigned>(v) < hw) hw = static_cast<unsigned>(v);
    }
    return hw;
}

} // namespace

EnumerationResult enumerate_assignments(int n) {
    if (!is_prime(n)) throw std::invalid_argument("enumeration needs a prime exponent");
    if (n > 7)
        throw std::invalid_argument("full enumeration supported for n in {2,3,5,7}; "
                                    "larger primes are out of the v1 envelope");
    EnumerationResult res;
    res.n = n;
    res.kernel_dim = relation_kernel_dim(n);

    const auto& pm = plane_model();
    using V = std::array<int, 2>;
    std::vector<V> nz;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (a || b) nz.push_back({a, b});

    auto addv = [n](V x, V y) { return V{(x[0] + y[0]) % n, (x[1] + y[1]) % n}; };

    // solutions of the relation system = six line values with sum 0
    // (exceptional values follow); backtrack with the three disjoint-line
    // independence checks pulled forward. Slices of the outermost value are
    // independent, so they may run on worker threads; the final sort makes
    // the result order-independent.
    auto scan_slice = [&](std::size_t begin, std::size_t end, std::vector<DelPezzoAssignment>& sink) {
        std::array<V, 6> g{};
        auto emit = [&]() {
            std::array<V, 4> eps{};
            for (int i = 1; i <= 4; ++i) {
                V e{0, 0};
                for (int t = 0; t < 6; ++t)
                    if (pm.lines[t].first == i || pm.lines[t].second == i) e = addv(e, g[t]);
                if (is_zero(e)) return;
                eps[i - 1] = e;
            }
            // line vs exceptional independence at each blown-up point
            for (int t = 0; t < 6; ++t)
                for (int i : {pm.lines[t].first, pm.lines[t].second})
                    if (!indep(g[t], eps[i - 1], n)) return;
            // generation: guaranteed by the disjoint-line checks, rechecked cheaply
            bool gen = false;
            for (int t = 1; t < 6 && !gen; ++t) gen = indep(g[0], g[t], n);
            if (!gen) return;

            DelPezzoAssignment a{};
            for (int t = 0; t < 6; ++t) a.v[pm.class_index[t]] = g[t];
            for (int i = 0; i < 4; ++i) a.v[pm.except_index[i]] = eps[i];
            sink.push_back(a);
        };

        // line order: L12 L13 L14 L23 L24 L34; disjoint pairs (0,5), (1,4), (2,3)
        for (std::size_t idx = begin; idx < end; ++idx) {
            g[0] = nz[idx];
            for (const auto& g34 : nz) {
                if (!indep(g[0], g34, n)) continue;
                g[5] = g34;
                for (const auto& g13 : nz) {
                    g[1] = g13;
                    for (const auto& g24 : nz) {
                        if (!indep(g13, g24, n)) continue;
                        g[4] = g24;
                        for (const auto& g14 : nz) {
                            g[2] = g14;
                            V s{0, 0};
                            for (int t : {0, 1, 2, 4, 5}) s = addv(s, g[t]);
                            V g23{(n - s[0]) % n, (n - s[1]) % n};
                            if (is_zero(g23) || !indep(g14, g23, n)) continue;
                            g[3] = g23;
                            emit();
                        }
                    }
                }
            }
        }
    };

    const unsigned workers = std::min<std::size_t>(thread_cap(), nz.size());
    if (workers <= 1) {
        scan_slice(0, nz.size(), res.admissible);
    } else {
        std::vector<std::vector<DelPezzoAssignment>> sinks(workers);
        std::vector<std::thread> pool;
        const std::size_t chunk = (nz.size() + workers - 1) / workers;
        for (unsigned w = 0; w < workers; ++w) {
            std::size_t b = w * chunk, e = std::min(nz.size(), b + chunk);
            if (b >= e) break;
            pool.emplace_back(scan_slice, b, e, std::ref(sinks[w]));
        }
        for (auto& t : pool) t.join();
        for (auto& s : sinks)
            res.admissible.insert(res.admissible.end(), s.begin(), s.end());
    }
    std::sort(res.admissible.begin(), res.admissible.end());
    return res;
}

namespace {

DelPezzoAssignment act_gl(const std::array<int, 4>& mmat, const DelPezzoAssignment& a, int n) {
    DelPezzoAssignment out{};
    for (int t = 0; t < 10; ++t) {
        int x = a.v[t][0], y = a.v[t][1];
        out.v[t] = {(mmat[0] * x + mmat[1] * y) % n, (mmat[2] * x + mmat[3] * y) % n};
    }
    return out;
}

DelPezzoAssignment act_s5(const std::array<int, 5>& perm, const DelPezzoAssignment& a) {
    DelPezzoAssignment out{};
    for (int t = 0; t < 10; ++t) {
        auto [i, j] = geometry::delpezzo_pairs()[t];
        out.v[geometry::delpezzo_pair_index(perm[i - 1], perm[j - 1])] = a.v[t];
    }
    return out;
}

struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) { parent[find(a)] = parent[find(b)]; }
};

} // namespace

std::optional<DelPezzoAssignment> assignment_from_line_values(
    const std::array<std::array<int, 2>, 6>& g, int n) {
    const auto& pm = plane_model();
    int s0 = 0, s1 = 0;
    for (const auto& v : g) {
        s0 += v[0];
        s1 += v[1];
    }
    if (s0 % n != 0 || s1 % n != 0) return std::nullopt;
    DelPezzoAssignment a{};
    for (int t = 0; t < 6; ++t) a.v[pm.class_index[t]] = {g[t][0] % n, g[t][1] % n};
    for (int i = 1; i <= 4; ++i) {
        int e0 = 0, e1 = 0;
        for (int t = 0; t < 6; ++t)
            if (pm.lines[t].first == i || pm.lines[t].second == i) {
                e0 += g[t][0];
                e1 += g[t][1];
            }
        a.v[pm.except_index[i - 1]] = {e0 % n, e1 % n};
    }
    return a;
}

OrbitClassification classify_orbits(int n, bool keep_membership) {
    auto enumeration = enumerate_assignments(n);
    OrbitClassification out;
    out.n = n;
    out.kernel_dim = enumeration.kernel_dim;
    out.admissible_count = enumeration.admissible.size();

    const auto& adm = enumeration.admissible;
    std::map<DelPezzoAssignment, std::size_t> index;
    for (std::size_t i = 0; i < adm.size(); ++i) index[adm[i]] = i;

    // generators of GL(2, Z/n) and of S5
    std::vector<std::array<int, 4>> gl_gens = {{1, 1, 0, 1}, {0, 1, 1, 0}};
    for (int a = 2; a < n; ++a) gl_gens.push_back({a, 0, 0, 1});
    std::vector<std::array<int, 5>> s5_gens = {{2, 1, 3, 4, 5}, {2, 3, 4, 5, 1}};

    UnionFind uf(adm.size());
    for (std::size_t i = 0; i < adm.size(); ++i) {
        for (const auto& mg : gl_gens) {
            auto img = act_gl(mg, adm[i], n);
            auto it = index.find(img);
            if (it == index.end())
                throw std::logic_error("GL action left the admissible set");
            uf.unite(i, it->second);
        }
        for (const auto& pg : s5_gens) {
            auto img = act_s5(pg, adm[i]);
            auto it = index.find(img);
            if (it == index.end())
                throw std::logic_error("S5 action left the admissible set");
            uf.unite(i, it->second);
        }
    }

    std::map<std::size_t, OrbitInfo> orbits;
    for (std::size_t i = 0; i < adm.size(); ++i) {
        std::size_t root = uf.find(i);
        auto [it, fresh] = orbits.try_emplace(root);
        if (fresh || adm[i] < it->second.representative) it->second.representative = adm[i];
        it->second.size += 1;
    }
    std::vector<std::pair<std::size_t, OrbitInfo>> flat;
    for (auto& [root, info] : orbits) {
        auto spec = assignment_cover(info.representative, n);
        info.invariants = covers::invariants_general(spec);
        auto [q, pg] = hodge::irregularity_and_pg(spec);
        info.q = q;
        info.pg = pg;
        flat.emplace_back(root, std::move(info));
    }
    std::sort(flat.begin(), flat.end(), [](const auto& a, const auto& b) {
        return a.second.representative < b.second.representative;
    });
    std::map<std::size_t, std::size_t> root_to_index;
    for (std::size_t i = 0; i < flat.size(); ++i) {
        root_to_index[flat[i].first] = i;
        out.orbits.push_back(std::move(flat[i].second));
    }
    if (keep_membership)
        for (std::size_t i = 0; i < adm.size(); ++i)
            out.membership[adm[i]] = root_to_index.at(uf.find(i));
    return out;
}

// ---- Beauville ----

namespace {

long mod_inverse(long a, long n) {
    long t = 0, nt = 1, r = n, nr = ((a % n) + n) % n;
    while (nr != 0) {
        long q = r / nr;
        long tmp = t - q * nt;
        t = nt;
        nt = tmp;
        tmp = r - q * nr;
        r = nr;
        nr = tmp;
    }
    if (r != 1) throw std::domain_error("not invertible");
    return ((t % n) + n) % n;
}

long det2(const Vec2& a, const Vec2& b, long n) {
    return (((a[0] * b[1] - a[1] * b[0]) % n) + n) % n;
}

bool unimodular(const Vec2& a, const Vec2& b, long n) {
    return std::gcd(det2(a, b, n), n) == 1;
}

Vec2 vneg(const Vec2& a, long n) { return {(n - a[0]) % n, (n - a[1]) % n}; }

Vec2 vsub0(const Vec2& a, const Vec2& b, long n) {
    return {((-a[0] - b[0]) % n + n) % n, ((-a[1] - b[1]) % n + n) % n};
}

// union of the cyclic spans of the triple's entries, as packed values a*n+b
std::set<long> sigma_set(const Triple& t, long n) {
    std::set<long> s;
    for (const auto& e : t.e) {
        Vec2 cur{0, 0};
        do {
            s.insert(cur[0] * n + cur[1]);
            cur = {(cur[0] + e[0]) % n, (cur[1] + e[1]) % n};
        } while (cur[0] != 0 || cur[1] != 0);
    }
    return s;
}

Triple sorted_triple(Triple t) {
    std::sort(t.e.begin(), t.e.end());
    return t;
}

Triple apply_mat(const std::array<long, 4>& m, const Triple& t, long n) {
    Triple out;
    for (int i = 0; i < 3; ++i)
        out.e[i] = {(m[0] * t.e[i][0] + m[1] * t.e[i][1]) % n,
                    (m[2] * t.e[i][0] + m[3] * t.e[i][1]) % n};
    return out;
}

// matrix sending x -> (1,0), y -> (0,1): the inverse of [x y] (columns)
std::array<long, 4> normalizing_matrix(const Vec2& x, const Vec2& y, long n) {
    long det = det2(x, y, n);
    long inv = mod_inverse(det, n);
    auto rd = [&](long v) { return ((v % n) + n) % n; };
    return {rd(y[1] * inv), rd(-y[0] * inv), rd(-x[1] * inv), rd(x[0] * inv)};
}

// canonical form: first triple mapped onto ((1,0),(0,1),(-1,-1)), second triple
// minimized over the residual symmetry and the swap
Triple canonical_second(const Triple& t1, const Triple& t2, long n) {
    std::optional<Triple> best;
    auto consider = [&](const Triple& a, const Triple& b) {
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                if (i == j) continue;
                auto m = normalizing_matrix(a.e[i], a.e[j], n);
                Triple cand = sorted_triple(apply_mat(m, b, n));
                if (!best || cand.e < best->e) best = cand;
            }
    };
    consider(t1, t2);
    consider(t2, t1);
    return *best;
}

} // namespace

bool beauville_free(const BeauvilleDatum& d, long n) {
    auto s1 = sigma_set(d.t1, n);
    auto s2 = sigma_set(d.t2, n);
    for (long v : s1)
        if (v != 0 && s2.count(v)) return false;
    return true;
}

BeauvilleResult beauville_search(long n) {
    if (n < 2) throw std::invalid_argument("need n >= 2");
    BeauvilleResult out;
    out.n = n;
    // every generating triple is GL(2,Z/n)-equivalent to this one
    const Triple t0{{{Vec2{1, 0}, Vec2{0, 1}, Vec2{(n - 1) % n, (n - 1) % n}}}};

    auto s0 = sigma_set(t0, n);
    std::set<std::array<Vec2, 3>> seen;
    for (long a0 = 0; a0 < n; ++a0)
        for (long a1 = 0; a1 < n; ++a1)
            for (long b0 = 0; b0 < n; ++b0)
                for (long b1 = 0; b1 < n; ++b1) {
                    Vec2 a{a0, a1}, b{b0, b1};
                    if (!unimodular(a, b, n)) continue;
                    Triple t{{a, b, vsub0(a, b, n)}};
                    // stabilizer-set disjointness against the normalized first triple
                    auto s = sigma_set(t, n);
                    bool free = true;
                    for (long v : s)
                        if (v != 0 && s0.count(v)) { free = false; break; }
                    if (!free) continue;
                    Triple canon = canonical_second(t0, t, n);
                    if (seen.insert(canon.e).second)
                        out.witnesses.push_back({t0, canon});
                }
    return out;
}

// ---- Cayley table machinery ----

CayleyGroup::CayleyGroup(std::vector<std::vector<int>> table) : table_(std::move(table)) {
    const int n = static_cast<int>(table_.size());
    if (n == 0) throw std::invalid_argument("empty Cayley table");
    for (const auto& row : table_) {
        if (static_cast<int>(row.size()) != n) throw std::invalid_argument("Cayley table is not square");
        for (int x : row)
            if (x < 0 || x >= n) throw std::invalid_argument("Cayley table entry out of range");
    }
    // latin square
    for (int i = 0; i < n; ++i) {
        std::vector<bool> seen_row(n, false), seen_col(n, false);
        for (int j = 0; j < n; ++j) {
            if (seen_row[table_[i][j]]) throw std::invalid_argument("Cayley table row is not a permutation");
            seen_row[table_[i][j]] = true;
            if (seen_col[table_[j][i]]) throw std::invalid_argument("Cayley table column is not a permutation");
            seen_col[table_[j][i]] = true;
        }
    }
    // two-sided identity
    for (int e = 0; e < n; ++e) {
        bool ok = true;
        for (int x = 0; x < n && ok; ++x) ok = table_[e][x] == x && table_[x][e] == x;
        if (ok) { identity_ = e; break; }
    }
    if (identity_ < 0) throw std::invalid_argument("Cayley table has no identity");
    inverse_.assign(n, -1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b)
            if (table_[a][b] == identity_ && table_[b][a] == identity_) { inverse_[a] = b; break; }
        if (inverse_[a] < 0) throw std::invalid_argument("Cayley table element lacks an inverse");
    }
    // associativity via Light's test on a generating set
    std::vector<int> gens;
    std::vector<bool> closed(n, false);
    closed[identity_] = true;
    int closed_count = 1;
    while (closed_count < n) {
        int fresh = -1;
        for (int x = 0; x < n; ++x)
            if (!closed[x]) { fresh = x; break; }
        gens.push_back(fresh);
        // saturate the closure with the new generator
        std::vector<int> frontier;
        for (int x = 0; x < n; ++x)
            if (closed[x]) frontier.push_back(x);
        while (!frontier.empty()) {
            int x = frontier.back();
            frontier.pop_back();
            for (int g : gens) {
                for (int y : {table_[x][g], table_[g][x]})
                    if (!closed[y]) {
                        closed[y] = true;
                        ++closed_count;
                        frontier.push_back(y);
                    }
            }
        }
    }
    for (int g : gens)
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                if (table_[table_[x][g]][y] != table_[x][table_[g][y]])
                    throw std::invalid_argument("Cayley table is not associative");
}

void validate_stabilizer_set(const CayleyGroup& g, const std::vector<int>& s) {
    std::set<int> sset(s.begin(), s.end());
    for (int x : s) {
        if (x < 0 || x >= g.order()) throw std::invalid_argument("stabilizer element out of range");
        if (!sset.count(g.inv(x)))
            throw std::invalid_argument("stabilizer set is not closed under inversion");
        for (int h = 0; h < g.order(); ++h) {
            int conj = g.mul(g.mul(h, x), g.inv(h));
            if (!sset.count(conj))
                throw std::invalid_argument("stabilizer set is not closed under conjugation");
        }
    }
}

namespace {

// branch and bound max clique with greedy colour bounds; candidates are kept
// in ascending element order so the result is deterministic
struct CliqueSearch {
    const std::vector<std::vector<bool>>& adj;
    std::vector<int> best;

    void expand(std::vector<int>& current, std::vector<int>& cand) {
        if (cand.empty()) {
            if (current.size() > best.size()) best = current;
            return;
        }
        // greedy colouring bound
        std::vector<int> colour(cand.size(), 0);
        int max_colour = 0;
        for (std::size_t i = 0; i < cand.size(); ++i) {
            std::set<int> used;
            for (std::size_t j = 0; j < i; ++j)
                if (adj[cand[i]][cand[j]]) used.insert(colour[j]);
            int c = 1;
            while (used.count(c)) ++c;
            colour[i] = c;
            max_colour = std::max(max_colour, c);
        }
        if (current.size() + max_colour <= best.size()) return;

        for (std::size_t idx = cand.size(); idx-- > 0;) {
            if (current.size() + colour[idx] <= best.size()) continue;
            int v = cand[idx];
            current.push_back(v);
            std::vector<int> next;
            for (std::size_t j = 0; j < idx; ++j)
                if (adj[v][cand[j]]) next.push_back(cand[j]);
            expand(current, next);
            current.pop_back();
        }
    }
};

} // namespace

PackingResult sphere_packing(const PackingProblem& p, PackingMode mode) {
    const auto& g = p.group;
    validate_stabilizer_set(g, p.stabilizers);
    std::vector<bool> forbidden(g.order(), false);
    for (int s : p.stabilizers)
        if (s != g.identity()) forbidden[s] = true;

    auto compatible = [&](int a, int b) { return !forbidden[g.mul(g.inv(a), b)]; };

    PackingResult out;
    out.mode = mode;
    if (mode == PackingMode::greedy) {
        for (int x = 0; x < g.order(); ++x) {
            bool ok = true;
            for (int y : out.elements) ok = ok && compatible(y, x);
            if (ok) out.elements.push_back(x);
        }
    } else {
        if (g.order() > 5000)
            throw std::invalid_argument("exact packing is restricted to |G| <= 5000");
        // packings translate, so some maximum packing contains the identity;
        // search cliques through it
        std::vector<int> cand;
        for (int x = 0; x < g.order(); ++x)
            if (x != g.identity() && compatible(g.identity(), x)) cand.push_back(x);
        std::vector<std::vector<bool>> adj(g.order(), std::vector<bool>(g.order(), false));
        for (std::size_t i = 0; i < cand.size(); ++i)
            for (std::size_t j = i + 1; j < cand.size(); ++j) {
                bool e = compatible(cand[i], cand[j]);
                adj[cand[i]][cand[j]] = adj[cand[j]][cand[i]] = e;
            }
        CliqueSearch cs{adj, {}};
        std::vector<int> cur;
        cs.expand(cur, cand);
        out.elements = cs.best;
        out.elements.push_back(g.identity());
        std::sort(out.elements.begin(), out.elements.end());
    }
    // verify the returned set pairwise
    for (std::size_t i = 0; i < out.elements.size(); ++i)
        for (std::size_t j = i + 1; j < out.elements.size(); ++j)
            if (!compatible(out.elements[i], out.elements[j]) ||
                !compatible(out.elements[j], out.elements[i]))
                throw std::logic_error("packing verification failed");
    out.r = out.elements.size();
    return out;
}

namespace {

bool is_subgroup(const CayleyGroup& g, const std::vector<int>& h) {
    std::set<int> hs(h.begin(), h.end());
    if (!hs.count(g.identity())) return false;
    for (int a : hs) {
        if (!hs.count(g.inv(a))) return false;
        for (int b : hs)
            if (!hs.count(g.mul(a, b))) return false;
    }
    return true;
}

} // namespace

EmbeddingReport embedding_check(const CayleyGroup& g, const std::vector<int>& h1,
                                const std::vector<int>& h2, const std::vector<int>& s) {
    if (!is_subgroup(g, h1) || !is_subgroup(g, h2))
        throw std::invalid_argument("H1 and H2 must be subgroups");
    EmbeddingReport rep;
    std::set<int> sset(s.begin(), s.end());
    for (int x : h1)
        if (x != g.identity() && sset.count(x)) {
            rep.warnings.push_back("H1 does not act freely (meets the stabilizer set)");
            break;
        }
    for (int x : h2)
        if (x != g.identity() && sset.count(x)) {
            rep.warnings.push_back("H2 does not act freely (meets the stabilizer set)");
            break;
        }
    rep.embeds = true;
    for (int b : h2) {
        for (int a : h1) {
            if (a == g.identity()) continue;
            if (sset.count(g.mul(b, a))) {
                rep.embeds = false;
                return rep;
            }
        }
    }
    return rep;
}

PolygonalType polygonal_type(const std::vector<long>& orders, const Int& group_order) {
    if (orders.size() < 3) throw std::invalid_argument("polygonal type needs k >= 3 orders");
    PolygonalType out;
    Rat sum = 0;
    for (long ni : orders) {
        if (ni < 2) throw std::invalid_argument("branching orders must be >= 2");
        sum += Rat(ni - 1, ni);
    }
    out.angle_defect = sum - 2;
    out.hyperbolic = out.angle_defect > 0;
    Rat two_b_minus_2 = Rat(group_order) * out.angle_defect;
    Rat b = two_b_minus_2 / 2 + 1;
    if (!is_integer(b))
        throw std::domain_error("non-integral base genus: no such action exists");
    out.base_genus = to_integer(b);
    out.hurwitz_bound = 84 * (out.base_genus - 1);
    return out;
}

} // namespace kummerlab::search
