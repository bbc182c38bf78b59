#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pjack/characters.hpp"
#include "pjack/fock.hpp"
#include "pjack/presentation.hpp"

using namespace pjack;

TEST_CASE("ch_A basics and graded dimension agreement") {
    QSeries a = ch_A(1, 4, 12);
    CHECK(a.coeff(0, Rat(0)) == 1);
    CHECK(a.coeff(2, Rat(2)) == 1);
    for (long m = 1; m <= 2; ++m) {
        QSeries s = ch_A(m, 4, 12);
        for (long k = 0; k <= 4; ++k)
            for (long t = 0; t <= 12; ++t)
                CHECK(s.coeff(k, Rat(t)) == graded_dim(m, k, t));
    }
}

TEST_CASE("ch_A coefficients are nonnegative") {
    for (long m = 1; m <= 3; ++m) {
        QSeries s = ch_A(m, 5, 10);
        for (const auto& [key, c] : s.terms()) CHECK(c > 0);
    }
}

TEST_CASE("principal character matches the unbounded mode span") {
    for (long m = 1; m <= 2; ++m) {
        Rat pq = sector_energy(2 * m, m - 1);
        QSeries ch = ch_principal(m, 6, 8);
        // leading term: the extremal vector itself
        CHECK(ch.coeff(m - 1, pq) == 1);
        GradedSubspace sp = principal_space(m, 1 - m, -1, Rat(8) + pq);
        CHECK(ch == sp.character());
    }
    // m=1: k=1 term is q/(1-q)
    QSeries p1 = ch_principal(1, 6, 5);
    for (long t = 1; t <= 5; ++t) CHECK(p1.coeff(2, Rat(t)) == 1);
}

TEST_CASE("finite character counts") {
    for (long m = 1; m <= 3; ++m)
        for (long p = 0; p <= 10; ++p)
            CHECK(ch_finite(m, p, -1).value_at_one() ==
                  fibonacci_m(static_cast<int>(m), static_cast<int>(p)));
    CHECK(ch_finite(1, 2, -1).value_at_one() == 4);
}

TEST_CASE("finite character matches the windowed mode span") {
    for (auto [m, p] : std::vector<std::pair<long, long>>{{1, 3}, {2, 3}, {2, 4}}) {
        QSeries exact = ch_finite(m, p, -1);
        Rat top(0);
        for (const auto& [key, c] : exact.terms()) top = std::max(top, key.second);
        GradedSubspace sp = principal_space(m, p, p, top);
        CHECK(exact == sp.character());
    }
}

TEST_CASE("coinvariant character: dimensions, recursion, smallest case") {
    for (long m = 1; m <= 2; ++m)
        for (long n = 0; n <= 8; ++n)
            CHECK(ch_coinv(m, n, -1).value_at_one() ==
                  fibonacci_m(static_cast<int>(2 * m), static_cast<int>(n)));
    // ch(n) = ch(n-1) + z^{2m} q^{m+n-1} ch(n-2m)
    for (long m = 1; m <= 2; ++m)
        for (long n = 2 * m; n <= 8; ++n) {
            QSeries lhs = ch_coinv(m, n, -1);
            QSeries rhs =
                ch_coinv(m, n - 1, -1) + ch_coinv(m, n - 2 * m, -1).shifted(2 * m, Rat(m + n - 1));
            CHECK(lhs == rhs);
        }
    QSeries c11 = ch_coinv(1, 1, -1);
    CHECK(c11.terms().size() == 2);
    CHECK(c11.coeff(0, Rat(0)) == 1);
    CHECK(c11.coeff(2, Rat(1)) == 1);
}

TEST_CASE("lattice character structure") {
    QSeries l10 = ch_L(1, 0, 6);
    CHECK(l10.coeff(0, Rat(0)) == 1);
    CHECK(l10.coeff(0, Rat(2)) == 2);
    // sector charge 2n sits at base energy n^2 with unrestricted partitions on top
    for (long n = -2; n <= 2; ++n)
        for (long t = 0; n * n + t <= 4; ++t) {
            long pt[] = {1, 1, 2, 3, 5};
            CHECK(l10.coeff(2 * n, Rat(n * n + t)) == pt[t]);
        }
    for (long m = 1; m <= 2; ++m)
        for (long i = 0; i < 2 * m; ++i) {
            QSeries l = ch_L(m, i, 6);
            CHECK(l.coeff(2 * m + i, sector_energy(2 * m, 2 * m + i)) == 1);
            for (const auto& [key, c] : l.terms()) CHECK(c > 0);
        }
}

TEST_CASE("semi-infinite sequences: structure and counts") {
    for (long m = 1; m <= 2; ++m)
        for (long i = 0; i < 2 * m; ++i) {
            auto seqs = enumerate_semiinfinite(m, i, 6);
            std::map<std::pair<long, Rat>, Int> counts;
            for (const auto& s : seqs) {
                // gap conditions and canonicity of the tail parameter
                long T = -i + 2 * m * s.tail_n - 1;
                long prev = T;
                for (long x : s.extras) {
                    CHECK(x <= prev - 2 * m - (prev == T ? 1 : 0));
                    prev = x;
                }
                CHECK(s.charge ==
                      i - 2 * s.tail_n * m + 2 * m * (1 + static_cast<long>(s.extras.size())));
                counts[{s.charge, s.energy}] += 1;
            }
            QSeries l = ch_L(m, i, 6);
            CHECK(counts == l.terms());
        }
}

TEST_CASE("pure tail sequences give extremal vectors") {
    // no extras at tail parameter n: the vector v_{-i+2m(n-1)}
    for (long m = 1; m <= 2; ++m)
        for (long i = 0; i < 2 * m; ++i)
            for (const auto& s : enumerate_semiinfinite(m, i, 6))
                if (s.extras.empty()) {
                    long p = -i + 2 * m * (s.tail_n - 1);
                    CHECK(s.charge == -p);
                    CHECK(s.energy == sector_energy(2 * m, -p));
                }
}
