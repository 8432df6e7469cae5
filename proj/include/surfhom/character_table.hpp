#pragma once

// Exact character tables by Dixon's method: class-algebra structure
// constants, simultaneous eigenvectors of the class matrices over a prime
// field F_p with p = 1 (mod e), degree recovery from orthogonality mod p,
// and a discrete-Fourier lift of each value into Q(zeta_e). Every table is
// validated against the exact orthogonality relations before it is returned.
//
// Also: Frobenius-Schur and generalized indicators, central characters, and
// symmetric-group characters via the Murnaghan-Nakayama rule.

#include <cstdint>
#include <map>
#include <vector>

#include "surfhom/arith.hpp"
#include "surfhom/cyclotomic.hpp"
#include "surfhom/group.hpp"
#include "surfhom/partition.hpp"

namespace surfhom {

// a[i][j][k] = #{(x,y) in C_i x C_j : xy = rep(C_k)}
using StructureConstants = std::vector<std::vector<std::vector<long long>>>;

// Single class matrix M_i with (M_i)[j][k] = a_{ijk}.
inline std::vector<std::vector<long long>> class_matrix(const FiniteGroup& G,
                                                        const ConjugacyClassTable& classes,
                                                        int i) {
    const std::size_t n = classes.count();
    std::vector<std::vector<long long>> M(n, std::vector<long long>(n, 0));
    for (std::size_t k = 0; k < n; ++k) {
        int zk = classes.cls(static_cast<int>(k)).representative;
        for (int x : classes.cls(i).members)
            ++M[static_cast<std::size_t>(classes.class_of(G.mul(G.inv(x), zk)))][k];
    }
    return M;
}

inline StructureConstants structure_constants(const FiniteGroup& G,
                                              const ConjugacyClassTable& classes) {
    StructureConstants a;
    a.reserve(classes.count());
    for (std::size_t i = 0; i < classes.count(); ++i)
        a.push_back(class_matrix(G, classes, static_cast<int>(i)));
    return a;
}

namespace detail::fplin {

using Vec = std::vector<std::uint64_t>;
using Mat = std::vector<Vec>;

// In-place reduced row echelon form; returns pivot columns, drops zero rows.
inline std::vector<std::size_t> rref(Mat& A, const Fp& F) {
    std::vector<std::size_t> pivots;
    if (A.empty()) return pivots;
    const std::size_t rows = A.size(), cols = A[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && A[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(A[r], A[piv]);
        std::uint64_t inv = F.inv(A[r][c]);
        for (auto& x : A[r]) x = F.mul(x, inv);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || A[i][c] == 0) continue;
            std::uint64_t f = A[i][c];
            for (std::size_t t = 0; t < cols; ++t) A[i][t] = F.sub(A[i][t], F.mul(f, A[r][t]));
        }
        pivots.push_back(c);
        ++r;
    }
    A.resize(r);
    return pivots;
}

inline Mat nullspace(Mat A, const Fp& F) {
    const std::size_t m = A.empty() ? 0 : A[0].size();
    std::vector<std::size_t> pivots = rref(A, F);
    std::vector<bool> is_pivot(m, false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    Mat basis;
    for (std::size_t f = 0; f < m; ++f) {
        if (is_pivot[f]) continue;
        Vec x(m, 0);
        x[f] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = F.sub(0, A[r][f]);
        basis.push_back(std::move(x));
    }
    return basis;
}

inline Vec mat_vec(const Mat& M, const Vec& v, const Fp& F) {
    Vec out(M.size(), 0);
    for (std::size_t r = 0; r < M.size(); ++r) {
        std::uint64_t acc = 0;
        for (std::size_t c = 0; c < v.size(); ++c)
            if (M[r][c] && v[c]) acc = F.add(acc, F.mul(M[r][c], v[c]));
        out[r] = acc;
    }
    return out;
}

// Characteristic polynomial (monic, coefficients from constant term up) via
// reduction to upper Hessenberg form and the last-column expansion.
inline Vec charpoly(Mat A, const Fp& F) {
    const std::size_t m = A.size();
    for (std::size_t j = 0; j + 2 < m; ++j) {
        std::size_t piv = j + 1;
        while (piv < m && A[piv][j] == 0) ++piv;
        if (piv == m) continue;
        if (piv != j + 1) {
            std::swap(A[piv], A[j + 1]);
            for (std::size_t r = 0; r < m; ++r) std::swap(A[r][piv], A[r][j + 1]);
        }
        std::uint64_t inv = F.inv(A[j + 1][j]);
        for (std::size_t i = j + 2; i < m; ++i) {
            if (A[i][j] == 0) continue;
            std::uint64_t f = F.mul(A[i][j], inv);
            for (std::size_t c = 0; c < m; ++c) A[i][c] = F.sub(A[i][c], F.mul(f, A[j + 1][c]));
            for (std::size_t r = 0; r < m; ++r) A[r][j + 1] = F.add(A[r][j + 1], F.mul(f, A[r][i]));
        }
    }
    std::vector<Vec> p(m + 1);
    p[0] = {1};
    for (std::size_t k = 1; k <= m; ++k) {
        Vec cur(k + 1, 0);
        for (std::size_t t = 0; t < p[k - 1].size(); ++t) {
            cur[t + 1] = F.add(cur[t + 1], p[k - 1][t]);
            cur[t] = F.sub(cur[t], F.mul(A[k - 1][k - 1], p[k - 1][t]));
        }
        std::uint64_t subprod = 1;
        for (std::size_t i = 1; i < k; ++i) {
            subprod = F.mul(subprod, A[k - i][k - i - 1]);
            if (subprod == 0) break;
            std::uint64_t coef = F.mul(A[k - 1 - i][k - 1], subprod);
            if (coef == 0) continue;
            for (std::size_t t = 0; t < p[k - 1 - i].size(); ++t)
                cur[t] = F.sub(cur[t], F.mul(coef, p[k - 1 - i][t]));
        }
        p[k] = std::move(cur);
    }
    return p[m];
}

inline std::uint64_t poly_eval(const Vec& poly, std::uint64_t x, const Fp& F) {
    std::uint64_t acc = 0;
    for (std::size_t t = poly.size(); t-- > 0;) acc = F.add(F.mul(acc, x), poly[t]);
    return acc;
}

}  // namespace detail::fplin

// Smallest prime p = 1 (mod e) with p >= 101 and p > 2*sqrt(order).
inline std::uint64_t dixon_prime(unsigned long e, std::size_t order) {
    std::uint64_t lower = 101;
    while (lower * lower <= 4 * static_cast<std::uint64_t>(order)) ++lower;
    std::uint64_t p = ((lower - 2) / e + 1) * e + 1;  // smallest k*e+1 >= lower
    for (; p < (1ull << 32); p += e)
        if (is_prime(p)) return p;
    throw PrimeSearchFailed("no prime = 1 mod " + std::to_string(e) + " below search bound");
}

class CharacterTable {
public:
    CharacterTable(const FiniteGroup& G, const ConjugacyClassTable& classes,
                   std::vector<std::vector<Cyclotomic>> values, std::vector<long> degrees)
        : group_(&G), classes_(&classes), values_(std::move(values)), degrees_(std::move(degrees)) {}

    const FiniteGroup& group() const { return *group_; }
    const ConjugacyClassTable& classes() const { return *classes_; }
    std::size_t size() const { return values_.size(); }
    unsigned conductor() const { return static_cast<unsigned>(group_->exponent()); }

    const Cyclotomic& value(int chi, int cls) const {
        return values_[static_cast<std::size_t>(chi)][static_cast<std::size_t>(cls)];
    }
    long degree(int chi) const { return degrees_[static_cast<std::size_t>(chi)]; }
    int fs_indicator(int chi) const { return fs_[static_cast<std::size_t>(chi)]; }
    int conjugate_character(int chi) const { return conj_[static_cast<std::size_t>(chi)]; }

    void set_indicators(std::vector<int> fs) { fs_ = std::move(fs); }
    void set_conjugates(std::vector<int> conj) { conj_ = std::move(conj); }

private:
    const FiniteGroup* group_;
    const ConjugacyClassTable* classes_;
    std::vector<std::vector<Cyclotomic>> values_;
    std::vector<long> degrees_;
    std::vector<int> fs_;
    std::vector<int> conj_;
};

// (1/|G|) sum_g chi(g^n), computed classwise; exact rational integer.
inline BigInt generalized_indicator(const CharacterTable& table, int chi, long long n) {
    const FiniteGroup& G = table.group();
    const ConjugacyClassTable& classes = table.classes();
    std::vector<long> hits(classes.count(), 0);
    for (int g = 0; g < static_cast<int>(G.order()); ++g)
        ++hits[static_cast<std::size_t>(classes.class_of(G.pow(g, n)))];
    Cyclotomic sum = Cyclotomic::zero(table.conductor());
    for (std::size_t c = 0; c < classes.count(); ++c)
        sum += table.value(chi, static_cast<int>(c)) * Rational(hits[c]);
    sum /= Rational(static_cast<unsigned long>(G.order()));
    if (!sum.is_rational_integer())
        throw NonIntegerIndicator("nu_" + std::to_string(n) + " is not a rational integer");
    return sum.integer_value();
}

// nu(chi) = (1/|G|) sum_g chi(g^2), must land in {-1, 0, 1}.
inline int fs_indicator(const CharacterTable& table, int chi) {
    BigInt nu;
    try {
        nu = generalized_indicator(table, chi, 2);
    } catch (const NonIntegerIndicator&) {
        throw NonIndicatorValue("Frobenius-Schur indicator is not an integer");
    }
    if (nu < -1 || nu > 1)
        throw NonIndicatorValue("Frobenius-Schur indicator outside {-1,0,1}: " + nu.get_str());
    return static_cast<int>(nu.get_si());
}

// omega_chi(C+) = |C| chi(C) / chi(1)
inline Cyclotomic central_character(const CharacterTable& table, int chi, int cls) {
    Rational scale(static_cast<unsigned long>(table.classes().cls(cls).size()),
                   static_cast<unsigned long>(table.degree(chi)));
    scale.canonicalize();
    return table.value(chi, cls) * scale;
}

inline CharacterTable compute_character_table(const FiniteGroup& G,
                                              const ConjugacyClassTable& classes) {
    using namespace detail::fplin;
    const std::size_t n = classes.count();
    const unsigned long e = G.exponent();
    const std::uint64_t p = dixon_prime(e, G.order());
    const Fp F{p};

    // --- simultaneous eigenvectors of the class matrices over F_p ---
    struct Space {
        Mat basis;                        // RREF rows in ambient coordinates
        std::vector<std::size_t> pivots;
    };
    std::vector<Space> spaces;
    std::vector<Vec> done;  // one-dimensional spaces, as single vectors
    {
        Space full;
        full.basis = Mat(n, Vec(n, 0));
        for (std::size_t i = 0; i < n; ++i) {
            full.basis[i][i] = 1;
            full.pivots.push_back(i);
        }
        if (n == 1)
            done.push_back(full.basis[0]);
        else
            spaces.push_back(std::move(full));
    }
    for (std::size_t i = 1; i < n && !spaces.empty(); ++i) {
        Mat M(n, Vec(n, 0));
        {
            auto counts = class_matrix(G, classes, static_cast<int>(i));
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t c = 0; c < n; ++c)
                    M[r][c] = static_cast<std::uint64_t>(counts[r][c]) % p;
        }
        std::vector<Space> next;
        for (Space& W : spaces) {
            const std::size_t m = W.basis.size();
            Mat A(m, Vec(m, 0));
            for (std::size_t j = 0; j < m; ++j) {
                Vec w = mat_vec(M, W.basis[j], F);
                for (std::size_t l = 0; l < m; ++l) A[l][j] = w[W.pivots[l]];
                // the class matrices must keep W invariant
                for (std::size_t c = 0; c < n; ++c) {
                    std::uint64_t acc = 0;
                    for (std::size_t l = 0; l < m; ++l)
                        acc = F.add(acc, F.mul(A[l][j], W.basis[l][c]));
                    if (acc != w[c])
                        throw LiftInconsistent("class matrix does not preserve eigenspace");
                }
            }
            Vec poly = charpoly(A, F);
            std::size_t found = 0;
            for (std::uint64_t lam = 0; lam < p && found < m; ++lam) {
                if (poly_eval(poly, lam, F) != 0) continue;
                Mat shifted = A;
                for (std::size_t d = 0; d < m; ++d) shifted[d][d] = F.sub(shifted[d][d], lam);
                Mat null = nullspace(std::move(shifted), F);
                if (null.empty()) continue;
                Mat ambient;
                for (const Vec& s : null) {
                    Vec v(n, 0);
                    for (std::size_t j = 0; j < m; ++j)
                        if (s[j])
                            for (std::size_t c = 0; c < n; ++c)
                                v[c] = F.add(v[c], F.mul(s[j], W.basis[j][c]));
                    ambient.push_back(std::move(v));
                }
                found += ambient.size();
                Space sub;
                sub.pivots = rref(ambient, F);
                sub.basis = std::move(ambient);
                if (sub.basis.size() == 1)
                    done.push_back(sub.basis[0]);
                else
                    next.push_back(std::move(sub));
            }
            if (found != m) throw LiftInconsistent("eigenspace splitting lost dimensions");
        }
        spaces = std::move(next);
    }
    if (!spaces.empty())
        throw LiftInconsistent("class matrices failed to separate all characters");
    if (done.size() != n)
        throw LiftInconsistent("expected " + std::to_string(n) + " eigenvectors, found " +
                               std::to_string(done.size()));

    // --- normalize so the identity-class coordinate is 1 ---
    for (Vec& v : done) {
        if (v[0] == 0) throw LiftInconsistent("eigenvector vanishes on the identity class");
        std::uint64_t inv = F.inv(v[0]);
        for (auto& x : v) x = F.mul(x, inv);
    }

    // --- degrees from row orthogonality mod p ---
    std::vector<long> degrees(n, 0);
    std::vector<std::size_t> inv_class(n);
    for (std::size_t i = 0; i < n; ++i)
        inv_class[i] = static_cast<std::size_t>(classes.inverse_class(G, static_cast<int>(i)));
    long dmax = 1;
    while (static_cast<std::size_t>(dmax) * static_cast<std::size_t>(dmax) < G.order()) ++dmax;
    for (std::size_t r = 0; r < n; ++r) {
        std::uint64_t s = 0;
        for (std::size_t i = 0; i < n; ++i) {
            std::uint64_t term = F.mul(done[r][i], done[r][inv_class[i]]);
            term = F.mul(term, F.inv(classes.cls(static_cast<int>(i)).size() % p));
            s = F.add(s, term);
        }
        if (s == 0) throw LiftInconsistent("degree denominator vanished mod p");
        std::uint64_t d2 = F.mul(G.order() % p, F.inv(s));
        long d = 0;
        for (long cand = 1; cand <= dmax; ++cand)
            if (F.mul(static_cast<std::uint64_t>(cand), static_cast<std::uint64_t>(cand)) == d2) {
                d = cand;
                break;
            }
        if (d == 0) throw LiftInconsistent("no admissible degree matches mod p");
        degrees[r] = d;
    }

    // --- lift values to Q(zeta_e): multiplicities by discrete Fourier sums ---
    std::uint64_t z = 1;
    if (e > 1) {
        std::vector<unsigned long> prime_divs;
        unsigned long rest = e;
        for (unsigned long q = 2; q <= rest; ++q)
            if (rest % q == 0) {
                prime_divs.push_back(q);
                while (rest % q == 0) rest /= q;
            }
        for (std::uint64_t cand = 2; cand < p; ++cand) {
            if (F.pow(cand, e) != 1) continue;
            bool primitive = true;
            for (unsigned long q : prime_divs)
                if (F.pow(cand, e / q) == 1) { primitive = false; break; }
            if (primitive) { z = cand; break; }
        }
        if (z == 1) throw LiftInconsistent("no primitive e-th root of unity mod p");
    }
    std::vector<std::uint64_t> zpow(e);
    for (unsigned long t = 0; t < e; ++t) zpow[t] = F.pow(z, t);
    const std::uint64_t inv_e = F.inv(e % p);

    // class of rep(C_i)^t for t = 0..e-1
    std::vector<std::vector<std::size_t>> power_class(n, std::vector<std::size_t>(e));
    for (std::size_t i = 0; i < n; ++i) {
        int g = classes.cls(static_cast<int>(i)).representative;
        int cur = G.identity();
        for (unsigned long t = 0; t < e; ++t) {
            power_class[i][t] = static_cast<std::size_t>(classes.class_of(cur));
            cur = G.mul(cur, g);
        }
    }

    std::vector<std::vector<Cyclotomic>> rows(n);
    for (std::size_t r = 0; r < n; ++r) {
        // chi mod p on each class
        std::vector<std::uint64_t> chi_mod(n);
        for (std::size_t c = 0; c < n; ++c)
            chi_mod[c] = F.mul(F.mul(static_cast<std::uint64_t>(degrees[r]), done[r][c]),
                               F.inv(classes.cls(static_cast<int>(c)).size() % p));
        rows[r].reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            Cyclotomic val = Cyclotomic::zero(static_cast<unsigned>(e));
            std::uint64_t total_mult = 0;
            for (unsigned long j = 0; j < e; ++j) {
                std::uint64_t acc = 0;
                for (unsigned long t = 0; t < e; ++t) {
                    std::uint64_t zterm = zpow[(e - (j * t) % e) % e];
                    acc = F.add(acc, F.mul(chi_mod[power_class[i][t]], zterm));
                }
                std::uint64_t mult = F.mul(acc, inv_e);
                if (mult == 0) continue;
                total_mult += mult;
                val += Cyclotomic::root(static_cast<unsigned>(e), static_cast<long>(j)) *
                       Rational(static_cast<unsigned long>(mult));
            }
            if (total_mult != static_cast<std::uint64_t>(degrees[r]))
                throw LiftInconsistent("eigenvalue multiplicities do not sum to the degree");
            rows[r].push_back(std::move(val));
        }
    }

    // --- canonical order: ascending degree, ties by descending lexicographic
    // coefficient sequences (puts the all-ones row ahead of the sign row) ---
    std::vector<std::size_t> order_idx(n);
    for (std::size_t i = 0; i < n; ++i) order_idx[i] = i;
    std::sort(order_idx.begin(), order_idx.end(), [&](std::size_t a, std::size_t b) {
        if (degrees[a] != degrees[b]) return degrees[a] < degrees[b];
        for (std::size_t c = 0; c < n; ++c) {
            int cmp = Cyclotomic::compare(rows[a][c], rows[b][c]);
            if (cmp != 0) return cmp > 0;
        }
        return false;
    });
    std::vector<std::vector<Cyclotomic>> sorted_rows;
    std::vector<long> sorted_degrees;
    for (std::size_t i : order_idx) {
        sorted_rows.push_back(std::move(rows[i]));
        sorted_degrees.push_back(degrees[i]);
    }

    CharacterTable table(G, classes, std::move(sorted_rows), std::move(sorted_degrees));

    // --- exact validation ---
    const Rational order_q(static_cast<unsigned long>(G.order()));
    BigInt degree_sq_sum = 0;
    for (std::size_t r = 0; r < n; ++r) {
        degree_sq_sum += BigInt(table.degree(static_cast<int>(r))) * table.degree(static_cast<int>(r));
        if (G.order() % static_cast<unsigned long>(table.degree(static_cast<int>(r))) != 0)
            throw LiftInconsistent("character degree does not divide the group order");
    }
    if (degree_sq_sum != static_cast<unsigned long>(G.order()))
        throw LiftInconsistent("sum of squared degrees is not the group order");
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a; b < n; ++b) {
            Cyclotomic ip = Cyclotomic::zero(static_cast<unsigned>(e));
            for (std::size_t c = 0; c < n; ++c)
                ip += table.value(static_cast<int>(a), static_cast<int>(c)) *
                      table.value(static_cast<int>(b), static_cast<int>(c)).conj() *
                      Rational(static_cast<unsigned long>(classes.cls(static_cast<int>(c)).size()));
            ip /= order_q;
            if (ip != Cyclotomic::integer(static_cast<unsigned>(e), a == b ? 1 : 0))
                throw LiftInconsistent("row orthogonality failed");
        }
    for (std::size_t c1 = 0; c1 < n; ++c1)
        for (std::size_t c2 = c1; c2 < n; ++c2) {
            Cyclotomic ip = Cyclotomic::zero(static_cast<unsigned>(e));
            for (std::size_t r = 0; r < n; ++r)
                ip += table.value(static_cast<int>(r), static_cast<int>(c1)) *
                      table.value(static_cast<int>(r), static_cast<int>(c2)).conj();
            Rational expect = c1 == c2
                                  ? make_rational(BigInt(static_cast<unsigned long>(G.order())),
                                                  BigInt(static_cast<unsigned long>(
                                                      classes.cls(static_cast<int>(c1)).size())))
                                  : Rational(0);
            if (ip != Cyclotomic::rational(static_cast<unsigned>(e), expect))
                throw LiftInconsistent("column orthogonality failed");
        }

    // conjugate-character indices; the table must be closed under conjugation
    std::vector<int> conj_map(n, -1);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            bool match = true;
            for (std::size_t c = 0; c < n && match; ++c)
                match = table.value(static_cast<int>(a), static_cast<int>(c)).conj() ==
                        table.value(static_cast<int>(b), static_cast<int>(c));
            if (match) { conj_map[a] = static_cast<int>(b); break; }
        }
        if (conj_map[a] < 0) throw LiftInconsistent("table not closed under conjugation");
    }
    table.set_conjugates(std::move(conj_map));

    std::vector<int> fs(n);
    for (std::size_t r = 0; r < n; ++r) fs[r] = fs_indicator(table, static_cast<int>(r));
    table.set_indicators(std::move(fs));
    return table;
}

// chi^lambda(mu) by Murnaghan-Nakayama border-strip recursion on beta-sets.
inline long long symmetric_group_character(const Partition& lambda, const Partition& mu) {
    if (lambda.weight() != mu.weight())
        throw WeightMismatch("partition weights differ: " + lambda.str() + " vs " + mu.str());
    static std::mutex mu_lock;
    static std::map<std::pair<std::vector<unsigned>, std::vector<unsigned>>, long long> memo;

    auto rec = [](auto&& self, const std::vector<unsigned>& lam,
                  const std::vector<unsigned>& rest) -> long long {
        if (lam.empty()) return 1;
        {
            std::lock_guard<std::mutex> lock(mu_lock);
            auto it = memo.find({lam, rest});
            if (it != memo.end()) return it->second;
        }
        unsigned strip = rest[0];
        std::vector<unsigned> next_rest(rest.begin() + 1, rest.end());
        const std::size_t L = lam.size();
        std::vector<long> beta(L);
        for (std::size_t i = 0; i < L; ++i)
            beta[i] = static_cast<long>(lam[i]) + static_cast<long>(L - 1 - i);
        long long total = 0;
        for (std::size_t i = 0; i < L; ++i) {
            long target = beta[i] - static_cast<long>(strip);
            if (target < 0) continue;
            bool occupied = false;
            std::size_t jumped = 0;
            for (std::size_t j = 0; j < L; ++j) {
                if (j == i) continue;
                if (beta[j] == target) { occupied = true; break; }
                if (beta[j] > target && beta[j] < beta[i]) ++jumped;
            }
            if (occupied) continue;
            std::vector<long> nb = beta;
            nb[i] = target;
            std::sort(nb.begin(), nb.end(), std::greater<long>());
            std::vector<unsigned> nl;
            for (std::size_t j = 0; j < L; ++j) {
                long part = nb[j] - static_cast<long>(L - 1 - j);
                if (part > 0) nl.push_back(static_cast<unsigned>(part));
            }
            long long sign = (jumped % 2 == 0) ? 1 : -1;
            total += sign * self(self, nl, next_rest);
        }
        {
            std::lock_guard<std::mutex> lock(mu_lock);
            memo.emplace(std::make_pair(lam, rest), total);
        }
        return total;
    };
    return rec(rec, lambda.parts, mu.parts);
}

}  // namespace surfhom
