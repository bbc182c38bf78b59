#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pjack/jack.hpp"
#include "pjack/symfunc.hpp"

using namespace pjack;

namespace {

SymFunc m(std::initializer_list<int> parts) {
    return SymFunc::basis_element(Basis::Monomial, Partition(parts));
}

// h_n = sum over |mu| = n of p_mu / z_mu
SymFunc complete_h(long n) {
    SymFunc f(Basis::PowerSum);
    for (const auto& mu : partitions_of(n)) f.add_term(mu, 1 / z_factor(mu));
    return f;
}

// Schur function via the determinant s_la = det(h_{la_i - i + j}), expanded
// by permutations (lengths here are tiny)
SymFunc schur(const Partition& la) {
    std::size_t n = la.length();
    if (n == 0) return SymFunc::constant(Rat(1));
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    SymFunc out(Basis::PowerSum);
    do {
        int inv = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inv;
        SymFunc term = SymFunc::constant(inv % 2 ? Rat(-1) : Rat(1));
        bool zero = false;
        for (std::size_t i = 0; i < n && !zero; ++i) {
            long e = la.part(i) - static_cast<long>(i) + static_cast<long>(perm[i]);
            if (e < 0) zero = true;
            else if (e > 0) term = multiply(term, complete_h(e));
        }
        if (!zero) out = out + term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

}  // namespace

TEST_CASE("small Jack polynomials") {
    for (Rat al : {rat(1), rat(2), rat(3), rat(5, 2)}) {
        CHECK(jack(Partition{1}, al) == m({1}));
        CHECK(jack(Partition{1, 1}, al) == m({1, 1}));
        CHECK(jack(Partition{2}, al) == m({2}) + m({1, 1}) * (2 * al / (al + 1)));
    }
    CHECK(jack(Partition{2}, Rat(1)) == m({2}) + m({1, 1}));
    CHECK_THROWS(jack(Partition{2}, Rat(0)));
}

TEST_CASE("degree 2 Gram-Schmidt oracle") {
    // project m_2 off m_11 by hand: J_2 = m_2 - <m_2, m_11>/<m_11, m_11> m_11
    for (Rat al : {rat(1), rat(3), rat(1, 2)}) {
        SymFunc m2 = change_basis(m({2}), Basis::PowerSum);
        SymFunc m11 = change_basis(m({1, 1}), Basis::PowerSum);
        SymFunc j2 = m2 - m11 * (inner_alpha(m2, m11, al) / inner_alpha(m11, m11, al));
        CHECK(jack(Partition{2}, al) == j2);
    }
}

TEST_CASE("norms") {
    for (Rat al : {rat(1), rat(2), rat(7, 3)}) CHECK(jack_norm_sq(Partition{1}, al) == 1 / al);
    // J_(2) at alpha=1 is h_2 = p_2/2 + p_1^2/2, so the norm is
    // (1/4)*2 + (1/4)*2 = 1 (Schur functions are orthonormal here)
    CHECK(jack_norm_sq(Partition{2}, Rat(1)) == 1);
    for (long a : {1L, 2L, 3L})
        for (long d = 0; d <= 6; ++d)
            for (const auto& la : partitions_of(d))
                CHECK(jack_norm_sq(la, Rat(a)) != 0);
}

TEST_CASE("triangularity with unit leading coefficient, degree <= 7") {
    for (Rat al : {rat(2), rat(1, 2)})
        for (long d = 1; d <= 7; ++d)
            for (const auto& la : partitions_of(d)) {
                SymFunc j = jack(la, al);
                CHECK(j.coeff(la) == 1);
                for (const auto& [mu, c] : j.terms())
                    CHECK(dominance_leq(mu, la) == Dominance::LessEqual);
            }
}

TEST_CASE("orthogonality, degree <= 7") {
    for (Rat al : {rat(1), rat(2), rat(3), rat(1, 2)})
        for (long d = 1; d <= 7; ++d) {
            auto parts = partitions_of(d);
            std::vector<SymFunc> js;
            for (const auto& la : parts) js.push_back(change_basis(jack(la, al), Basis::PowerSum));
            for (std::size_t i = 0; i < js.size(); ++i)
                for (std::size_t j = 0; j < i; ++j)
                    CHECK(inner_alpha(js[i], js[j], al) == 0);
        }
}

TEST_CASE("alpha = 1 gives Schur functions (Jacobi-Trudi oracle)") {
    for (long d = 1; d <= 6; ++d)
        for (const auto& la : partitions_of(d)) CHECK(jack(la, Rat(1)) == schur(la));
}

TEST_CASE("skew coefficient basics") {
    for (Rat al : {rat(1), rat(2)})
        for (long d = 1; d <= 4; ++d)
            for (const auto& la : partitions_of(d)) {
                auto t = skew_coefficients(la, la, al);
                CHECK(t.size() == 1);
                CHECK(t.at(Partition{}) == 1);
            }
    // Schur case s_1 s_1 = s_2 + s_11
    CHECK(skew_coefficients(Partition{2}, Partition{1}, Rat(1)).at(Partition{1}) == 1);
}

TEST_CASE("f vanishes unless mu is contained in la") {
    for (long d = 1; d <= 5; ++d)
        for (const auto& la : partitions_of(d))
            for (long e = 0; e <= d; ++e)
                for (const auto& mu : partitions_of(e)) {
                    if (la.contains(mu)) continue;
                    for (const auto& [nu, f] : skew_coefficients(la, mu, Rat(2)))
                        CHECK(f == 0);
                }
}

TEST_CASE("skew_onevar") {
    for (Rat al : {rat(1), rat(2), rat(3)}) {
        auto s = skew_onevar(Partition{2, 1}, Partition{2, 1}, al);
        CHECK(s.nonzero);
        CHECK(s.phi == 1);
        CHECK(s.exponent == 0);
        CHECK_FALSE(skew_onevar(Partition{2, 2}, Partition{1, 1}, al).nonzero);
    }
    auto s = skew_onevar(Partition{2, 1}, Partition{1, 1}, Rat(1));
    CHECK(s.nonzero);
    CHECK(s.phi == 1);
    CHECK(s.exponent == 1);
}

TEST_CASE("one-variable skew is nonzero exactly on horizontal strips") {
    // la/mu has at most one box per column iff la_1 >= mu_1 >= la_2 >= ...
    auto horizontal_strip = [](const Partition& la, const Partition& mu) {
        for (std::size_t i = 0; i < la.length(); ++i) {
            if (mu.part(i) > la.part(i)) return false;
            if (i + 1 < la.length() && mu.part(i) < la.part(i + 1)) return false;
        }
        return true;
    };
    for (long a : {1L, 2L, 3L, 4L})
        for (long d = 1; d <= 5; ++d)
            for (const auto& la : partitions_of(d))
                for (long e = 0; e < d; ++e)
                    for (const auto& mu : partitions_of(e)) {
                        if (!la.contains(mu)) continue;
                        CHECK(skew_onevar(la, mu, Rat(a)).nonzero ==
                              horizontal_strip(la, mu));
                    }
}

TEST_CASE("branching into a distinguished variable, degree <= 5") {
    // J_la(x_1..x_N) = sum over mu in la of J_{la/mu}(x_1) J_mu(x_2..x_N)
    Rat al(2);
    int nv = 5;
    for (long d = 1; d <= 5; ++d)
        for (const auto& la : partitions_of(d)) {
            auto lhs = expand_in_variables(change_basis(jack(la, al), Basis::PowerSum), nv);
            std::map<std::vector<int>, Rat> rhs;
            for (long e = 0; e <= d; ++e)
                for (const auto& mu : partitions_of(e)) {
                    if (!la.contains(mu)) continue;
                    long r = d - e;
                    Rat phi;
                    if (r == 0) {
                        phi = 1;
                    } else {
                        auto t = skew_coefficients(la, mu, al);
                        auto it = t.find(Partition{static_cast<int>(r)});
                        if (it == t.end()) continue;
                        phi = it->second;
                    }
                    auto pm = expand_in_variables(change_basis(jack(mu, al), Basis::PowerSum),
                                                  nv - 1);
                    for (const auto& [exps, c] : pm) {
                        std::vector<int> full(static_cast<std::size_t>(nv));
                        full[0] = static_cast<int>(r);
                        std::copy(exps.begin(), exps.end(), full.begin() + 1);
                        rhs[full] += c * phi;
                    }
                }
            for (auto it = rhs.begin(); it != rhs.end();)
                it = (it->second == 0) ? rhs.erase(it) : std::next(it);
            CHECK(lhs == rhs);
        }
}

TEST_CASE("Pieri-type identity for T_k") {
    auto rep = pieri_tj_check(Partition{1}, 1, Rat(2));
    CHECK(rep.equal);
    CHECK(rep.phi.at(Partition{}) == 1);
    CHECK(pieri_tj_check(Partition{2, 2}, 1, Rat(2)).equal);
    for (long a : {1L, 2L, 3L})
        for (long d = 1; d <= 5; ++d)
            for (const auto& la : partitions_of(d))
                for (int k = 1; k <= std::min(3, la.part(0)); ++k)
                    CHECK(pieri_tj_check(la, k, Rat(a)).equal);
}
