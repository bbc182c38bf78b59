// Acceptance gate: one line per criterion, exact arithmetic throughout.
// Exits nonzero if any criterion fails.

#include <algorithm>
#include <cstdio>
#include <map>
#include <vector>

#include "pjack/characters.hpp"
#include "pjack/fock.hpp"
#include "pjack/fusion.hpp"
#include "pjack/jack.hpp"
#include "pjack/presentation.hpp"
#include "pjack/qseries.hpp"
#include "pjack/symfunc.hpp"

using namespace pjack;

namespace {

// 1. Three routes to the graded dimensions of the quadratic algebra.
bool c1() {
    for (long m = 1; m <= 2; ++m)
        for (long k = 0; k <= 4; ++k)
            for (long s = 0; s <= 12; ++s) {
                long formula = graded_dim(m, k, s);
                long reduced = monomial_count(k, s) - relation_rank(m, k, s);
                long adm = 0;
                for (const auto& w : bidegree_monomials(k, s))
                    if (xi_admissible(m, w)) ++adm;
                if (formula != reduced || reduced != adm) return false;
            }
    return true;
}

// 2. Fermionic oracle: admissible monomials independent, squared derivative
// currents vanish coefficientwise.
bool c2() {
    for (long m = 1; m <= 2; ++m)
        for (long k = 1; k <= 3; ++k)
            for (long s = 0; s <= 10; ++s) {
                std::vector<FermionPoly> images;
                for (const auto& w : bidegree_monomials(k, s)) {
                    if (!xi_admissible(m, w)) continue;
                    images.push_back(fermion_xi_product(m, std::vector<int>(w.begin(), w.end())));
                }
                if (images.empty()) continue;
                std::map<FermionWord, std::size_t> cols;
                for (const auto& img : images)
                    for (const auto& [word, c] : img) cols.emplace(word, cols.size());
                RowSpace rs(cols.size());
                for (const auto& img : images) {
                    RatVec row(cols.size(), Rat(0));
                    for (const auto& [word, c] : img) row[cols.at(word)] = c;
                    if (!rs.add(row)) return false;
                }
            }
    for (long m = 1; m <= 2; ++m)
        for (long i = 0; i < m; ++i)
            for (long u = 0; u <= 8; ++u) {
                FermionPoly sum;
                for (long t1 = 0; t1 <= u + 2 * i; ++t1) {
                    long t2 = u + 2 * i - t1;
                    Int c = falling(t1, static_cast<unsigned>(i)) *
                            falling(t2, static_cast<unsigned>(i));
                    if (c == 0) continue;
                    for (const auto& [w, cw] :
                         fermion_xi_product(m, {static_cast<int>(t1), static_cast<int>(t2)}))
                        sum[w] += cw * Rat(c);
                }
                for (const auto& [w, cw] : sum)
                    if (cw != 0) return false;
            }
    return true;
}

// 3. Coinvariant quotient dimensions per bidegree.
bool c3() {
    const long kmax = 3, smax = 10;
    for (long m = 1; m <= 2; ++m)
        for (long top = 0; top <= 5; ++top) {
            CoinvariantReport rep = coinvariant_basis(m, top, kmax, smax);
            if (!rep.independent) return false;
            for (long k = 0; k <= kmax; ++k)
                for (long s = 0; s <= smax; ++s) {
                    long expect = 0;
                    for (const auto& w : bidegree_monomials(k, s)) {
                        if (!xi_admissible(m, w)) continue;
                        if (!w.empty() && w.back() > top) continue;
                        ++expect;
                    }
                    auto it = rep.dims.find({k, s});
                    long got = it == rep.dims.end() ? 0 : it->second;
                    if (got != expect) return false;
                }
        }
    return true;
}

// 4. Extremal-vector proportionality with nonzero constant.
bool c4() {
    for (long m = 1; m <= 3; ++m)
        for (long k = 1; k <= 3; ++k)
            for (long p = m * k + k; p <= 6; ++p) {
                MainTheoremReport rep = verify_theorem_main(m, p, k);
                if (!rep.match || rep.scale == 0) return false;
            }
    return true;
}

// 5. T_n machinery: two routes agree; single-row Pieri expansion; the
// one-variable reconstruction identity.
bool c5() {
    for (long d = 0; d <= 6; ++d)
        for (const auto& la : partitions_of(d)) {
            SymFunc f = SymFunc::basis_element(Basis::PowerSum, la);
            for (int n = 1; n <= 5; ++n)
                if (!(t_powersum(n, f) == t_extract(n, f, 7))) return false;
        }
    for (long d = 1; d <= 5; ++d)
        for (const auto& la : partitions_of(d))
            for (int k = 1; k <= 3 && k <= la.part(0); ++k)
                for (int a = 1; a <= 3; ++a)
                    if (!pieri_tj_check(la, k, Rat(a)).equal) return false;

    std::vector<SymFunc> samples;
    {
        SymFunc f1 = SymFunc::basis_element(Basis::PowerSum, Partition{5});
        f1 = f1 + SymFunc::basis_element(Basis::PowerSum, Partition{3, 1}) * Rat(2);
        f1 = f1 - SymFunc::basis_element(Basis::PowerSum, Partition{2, 2, 1}) * (Rat(1) / Rat(3));
        samples.push_back(f1);
        SymFunc f2 = SymFunc::basis_element(Basis::PowerSum, Partition{4, 1});
        f2 = f2 - SymFunc::basis_element(Basis::PowerSum, Partition{1}) + SymFunc::constant(Rat(7));
        samples.push_back(f2);
        samples.push_back(SymFunc::basis_element(Basis::PowerSum, Partition{2, 1, 1, 1}));
    }
    for (const SymFunc& f : samples) {
        const int nv = 6;
        auto lhs = expand_in_variables(f, nv);
        std::map<std::vector<int>, Rat> rhs;
        auto embed_rest = [&](const SymFunc& g, int x1pow, const Rat& scale) {
            if (g.is_zero()) return;
            for (const auto& [e, c] : expand_in_variables(g, nv - 1)) {
                std::vector<int> full(static_cast<std::size_t>(nv));
                full[0] = x1pow;
                std::copy(e.begin(), e.end(), full.begin() + 1);
                rhs[full] += c * scale;
            }
        };
        embed_rest(f, 0, Rat(1));
        for (int k = 1; k <= f.degree(); ++k)
            embed_rest(t_powersum(k, f), k, Rat(1) / Rat(factorial(static_cast<unsigned>(k))));
        for (auto it = rhs.begin(); it != rhs.end();)
            it = (it->second == 0) ? rhs.erase(it) : std::next(it);
        if (lhs != rhs) return false;
    }
    return true;
}

// 6. Heisenberg closure equals the Jack span per bidegree.
bool c6() {
    for (long m = 1; m <= 2; ++m)
        for (long k = 1; k <= 2; ++k)
            for (long p = m * k + k; p <= 5; ++p)
                if (!verify_theorem_jack(m, p, k).equal) return false;
    return true;
}

// 7. dim V = generalized Fibonacci, by three routes.
bool c7() {
    for (long m = 1; m <= 3; ++m)
        for (long n = 0; n <= 8; ++n) {
            QSeries exact = ch_finite(m, n, -1);
            Int formula = exact.value_at_one();
            if (formula != fibonacci_m(static_cast<int>(m), static_cast<int>(n))) return false;
            Int jcount = 1;  // k = 0: the extremal vector alone
            for (long k = 1; n - (k - 1) * m - 1 >= 0; ++k) {
                long width = n - (k - 1) * m - 1;
                jcount += static_cast<long>(
                    subdiagrams(static_cast<int>(width), static_cast<int>(k)).size());
            }
            if (jcount != formula) return false;
            if (n <= 5) {
                Rat top(0);
                for (const auto& [key, c] : exact.terms()) top = std::max(top, Rat(key.second));
                if (Int(principal_space(m, n, n, top).total_dim()) != formula) return false;
            }
        }
    for (long n = 0; n <= 8; ++n) {
        Int pw = Int(1) << static_cast<unsigned>(n);
        if (fibonacci_m(1, static_cast<int>(n)) != pw) return false;
    }
    return true;
}

// 8. Coinvariant character: two-term recursion and total dimension.
bool c8() {
    for (long m = 1; m <= 2; ++m) {
        for (long n = 2 * m; n <= 8; ++n) {
            QSeries lhs = ch_coinv(m, n, -1);
            QSeries rhs = ch_coinv(m, n - 1, -1) +
                          ch_coinv(m, n - 2 * m, -1).shifted(2 * m, Rat(m + n - 1));
            if (!(lhs == rhs)) return false;
        }
        for (long n = 0; n <= 8; ++n)
            if (ch_coinv(m, n, -1).value_at_one() !=
                fibonacci_m(static_cast<int>(2 * m), static_cast<int>(n)))
                return false;
    }
    return true;
}

// 9. Finitized subalgebra dimensions; the smallest nontrivial basis.
bool c9() {
    for (long m = 1; m <= 2; ++m)
        for (long n = 0; n <= 5; ++n)
            if (Int(finitization_dim(m, n)) !=
                fibonacci_m(static_cast<int>(m), static_cast<int>(n)))
                return false;
    // m=1, n=2: the basis is {1, xi_0, xi_1, xi_1^2}; every other product of
    // the two generators collapses
    if (finitization_dim(1, 2) != 4) return false;
    auto nf = [](XiMonomial w) { return normal_form(1, XiPoly{{std::move(w), Rat(1)}}); };
    if (nf({0}).empty() || nf({1}).empty() || nf({1, 1}).empty()) return false;
    if (!nf({0, 0}).empty() || !nf({0, 1}).empty()) return false;
    if (!nf({1, 1, 1}).empty() || !nf({0, 1, 1}).empty()) return false;
    return true;
}

// 10. Semi-infinite sequence counts per bidegree reproduce the sector
// characters.
bool c10() {
    for (long m = 1; m <= 2; ++m)
        for (long i = 0; i < 2 * m; ++i) {
            std::map<std::pair<long, Rat>, Int> counts;
            for (const auto& s : enumerate_semiinfinite(m, i, 6)) counts[{s.charge, s.energy}] += 1;
            if (counts != ch_L(m, i, 6).terms()) return false;
        }
    return true;
}

// 11. Fusion: generic quotient dimensions; index-reversal identity where the
// degeneration is a theorem (m = 1) or confirmed by the scan (m = 2, n <= 3);
// m = 1 limits equal defining ideals. Larger m and the odd case are
// conjecture-grade: deterministic verdict reports with semicontinuity only.
// The machine check turns up a genuine degree-2 discrepancy at m = 2, n = 4
// (see the fusion tests), which therefore stays in the report section.
bool c11() {
    for (long m = 1; m <= 2; ++m)
        for (long n = 1; n <= 5; ++n) {
            std::vector<Rat> z;
            for (long j = 1; j <= n; ++j) z.push_back(Rat(j));
            long kmax = 0;
            for (const auto& s : gap_ring(m, n).basis)
                kmax = std::max(kmax, static_cast<long>(s.size()));
            long total = 0;
            for (long k = 0; k <= kmax; ++k) {
                GradedIdealComponent c = kernel_component(m, n, z, k);
                total += c.ambient - c.dim();
            }
            GradedIdealComponent beyond = kernel_component(m, n, z, kmax + 1);
            if (beyond.ambient != beyond.dim()) return false;
            if (Int(total) != fibonacci_m(static_cast<int>(m), static_cast<int>(n))) return false;
        }
    for (long m = 1; m <= 2; ++m)
        for (long n = 1; n <= (m == 1 ? 4 : 3); ++n)
            for (long k = 0; k <= 4; ++k) {
                ReindexReport rep = reindex_limit_check(m, n, k, canonical_family(n));
                if (!rep.conclusive || !rep.equal) return false;
            }
    for (long n = 1; n <= 4; ++n)
        if (!conjecture_scan(1, n, 4, canonical_family(n)).all_equal) return false;
    // report-grade properties: determinism and semicontinuity
    for (long m = 1; m <= 2; ++m)
        for (long n = 1; n <= 4; ++n) {
            ConjectureReport r1 = conjecture_scan(m, n, 4, canonical_family(n));
            ConjectureReport r2 = conjecture_scan(m, n, 4, canonical_family(n));
            if (r1.verdicts != r2.verdicts || r1.limit_dims != r2.limit_dims ||
                r1.generic_dims != r2.generic_dims || r1.defining_dims != r2.defining_dims)
                return false;
            for (std::size_t k = 0; k < r1.verdicts.size(); ++k)
                if (r1.verdicts[k] != Verdict::Inconclusive &&
                    r1.limit_dims[k] < r1.generic_dims[k])
                    return false;
            if (m >= 2) {
                std::printf("  report m=%ld n=%ld verdicts:", m, n);
                for (Verdict v : r1.verdicts)
                    std::printf(" %s", v == Verdict::Equal          ? "equal"
                                       : v == Verdict::LimitLarger  ? "limit-larger"
                                       : v == Verdict::LimitSmaller ? "limit-smaller"
                                       : v == Verdict::Incomparable ? "incomparable"
                                                                    : "inconclusive");
                std::printf("\n");
            }
        }
    return true;
}

// 12. Mode-scalar reconstruction returns the Jack polynomial itself.
bool c12() {
    for (long m = 1; m <= 2; ++m)
        for (long k = 1; k <= 2; ++k)
            for (long p = m * k + k; p <= 4; ++p) {
                long width = p - (k - 1) * m - 1;
                for (const auto& mu :
                     subdiagrams(static_cast<int>(width), static_cast<int>(k)))
                    if (!(reconstruct_jack(m, p, k, mu) == jack(mu, Rat(m)))) return false;
            }
    return true;
}

int failures = 0;

void report(int idx, const char* title, bool ok) {
    std::printf("criterion %2d %-58s %s\n", idx, title, ok ? "PASS" : "FAIL");
    std::fflush(stdout);
    if (!ok) ++failures;
}

}  // namespace

int main() {
    report(1, "quadratic algebra graded dimensions, three routes", c1());
    report(2, "fermionic oracle: independence and vanishing squares", c2());
    report(3, "coinvariant bases per bidegree", c3());
    report(4, "extremal proportionality a_0^k v_p = C * J-hat", c4());
    report(5, "T_n machinery, Pieri expansion, reconstruction identity", c5());
    report(6, "closure equals the Jack span", c6());
    report(7, "dim V = generalized Fibonacci, three routes", c7());
    report(8, "coinvariant character recursion and dimension", c8());
    report(9, "finitized subalgebra dimensions and smallest basis", c9());
    report(10, "semi-infinite sequence counts match sector characters", c10());
    report(11, "fusion quotients, index reversal, degeneration reports", c11());
    report(12, "Jack reconstruction from mode scalars", c12());
    return failures == 0 ? 0 : 1;
}
