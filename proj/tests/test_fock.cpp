#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "pjack/fock.hpp"
#include "pjack/jack.hpp"

using namespace pjack;

namespace {

FockVector random_vector(std::mt19937& rng, long lattice, long charge, long max_deg) {
    std::uniform_int_distribution<long> dd(0, max_deg);
    std::uniform_int_distribution<long> dc(-4, 4);
    SymFunc f(Basis::PowerSum);
    for (int t = 0; t < 3; ++t) {
        auto parts = partitions_of(dd(rng));
        std::uniform_int_distribution<std::size_t> di(0, parts.size() - 1);
        f.add_term(parts[di(rng)], Rat(dc(rng)));
    }
    return {lattice, charge, f};
}

}  // namespace

TEST_CASE("extremal energies") {
    for (long m = 1; m <= 3; ++m)
        for (long p = -4; p <= 6; ++p)
            CHECK(extremal_energy(m, p) == rat(p * p, 4 * m) + rat(p * (m - 1), 2 * m));
    CHECK(extremal_energy(1, 0) == 0);
    CHECK(extremal_energy(2, 2) - extremal_energy(2, -2) == rat(2 * (2 - 1), 2));
}

TEST_CASE("heisenberg action") {
    FockVector vac = extremal(1, 0);
    CHECK(h_apply(1, h_apply(-1, vac)).poly == vac.poly);
    for (long m : {1L, 2L})
        for (long p : {1L, 3L})
            for (long i = 1; i <= 3; ++i)
                CHECK(h_apply(i, extremal(m, p)).is_zero());
    std::mt19937 rng(21);
    for (int t = 0; t < 10; ++t) {
        FockVector w = random_vector(rng, 4, -1, 5);
        for (long i = 1; i <= 3; ++i)
            for (long j = 1; j <= 3; ++j)
                CHECK(h_apply(i, h_apply(j, w)).poly == h_apply(j, h_apply(i, w)).poly);
        // [h_i, h_{-i}] = i
        for (long i = 1; i <= 3; ++i)
            CHECK(h_apply(i, h_apply(-i, w)).poly - h_apply(-i, h_apply(i, w)).poly ==
                  w.poly * Rat(i));
    }
}

TEST_CASE("modes on extremal vectors") {
    for (long m = 1; m <= 3; ++m)
        for (long p = 1; p <= 5; ++p) {
            FockVector v = extremal(m, p);
            for (long i = p; i <= p + 3; ++i) CHECK(a_apply(i, v).is_zero());
            FockVector w = a_apply(p - 1, v);
            CHECK(w.charge == -(p - 2 * m));
            CHECK(w.poly == SymFunc::constant(Rat(1)));
        }
}

TEST_CASE("mode grading invariant") {
    std::mt19937 rng(31);
    for (long lattice : {2L, 4L, 3L}) {
        for (int t = 0; t < 8; ++t) {
            FockVector w = random_vector(rng, lattice, (t % 5) - 2, 4);
            for (long n = -3; n <= 3; ++n) {
                FockVector u = a_apply(n, w);
                CHECK(u.charge == w.charge + lattice);
                if (!u.is_zero() && !w.is_zero()) {
                    // per homogeneous input term the degree drops by n; check
                    // on homogeneous slices
                    for (long d = 0; d <= w.poly.degree(); ++d) {
                        SymFunc comp = w.poly.homogeneous_component(d);
                        if (comp.is_zero()) continue;
                        FockVector part{lattice, w.charge, comp};
                        FockVector up = a_apply(n, part);
                        if (up.is_zero()) continue;
                        CHECK(q_degree(up) == q_degree(part) - Rat(n));
                    }
                }
            }
        }
    }
}

TEST_CASE("heisenberg-mode commutator in absorbed form") {
    // h_i a_j - a_j h_i = m a_{i+j} for i > 0 and also for i < 0
    std::mt19937 rng(41);
    for (long m : {1L, 2L}) {
        for (int t = 0; t < 6; ++t) {
            FockVector w = random_vector(rng, 2 * m, (t % 3) - 1, 3);
            // annihilators carry the absorbed constant m, creators 2 (the
            // product of the two is the unabsorbed 2m)
            for (long i : {1L, 2L, -1L, -2L})
                for (long j = -2; j <= 2; ++j) {
                    SymFunc lhs = h_apply(i, a_apply(j, w)).poly - a_apply(j, h_apply(i, w)).poly;
                    SymFunc rhs = a_apply(i + j, w).poly * (i > 0 ? Rat(m) : Rat(2));
                    CHECK(lhs == rhs);
                }
        }
    }
}

TEST_CASE("odd lattice modes anticommute") {
    std::mt19937 rng(51);
    for (long m : {1L, 2L}) {
        long lattice = 2 * m - 1;
        for (int t = 0; t < 6; ++t) {
            FockVector w = random_vector(rng, lattice, (t % 3) - 1, 3);
            for (long i = -2; i <= 2; ++i)
                for (long j = i; j <= 2; ++j) {
                    SymFunc anti = a_apply(i, a_apply(j, w)).poly + a_apply(j, a_apply(i, w)).poly;
                    CHECK(anti.is_zero());
                }
        }
    }
}

TEST_CASE("even lattice modes commute") {
    std::mt19937 rng(61);
    for (long m : {1L, 2L}) {
        for (int t = 0; t < 4; ++t) {
            FockVector w = random_vector(rng, 2 * m, (t % 3), 3);
            for (long i = -2; i <= 2; ++i)
                for (long j = i + 1; j <= 2; ++j)
                    CHECK(a_apply(i, a_apply(j, w)).poly == a_apply(j, a_apply(i, w)).poly);
        }
    }
}

TEST_CASE("quadratic relations annihilate the base vector") {
    for (long m : {1L, 2L}) {
        FockVector v = extremal(m, 1 - m);
        for (long i = 0; i < m; ++i)
            for (long s = 0; s <= 6; ++s) CHECK(relation_generator_apply(m, i, s, v).is_zero());
    }
}

TEST_CASE("rectangular Jack vectors") {
    FockVector v = rect_jack_vector(1, 2, 1);
    CHECK(v.charge == 0);
    CHECK(v.poly == SymFunc::basis_element(Basis::PowerSum, Partition{1}));
    CHECK(rect_jack_vector(2, 3, 1).poly == change_basis(jack(Partition{2}, Rat(2)), Basis::PowerSum));
    CHECK(rect_jack_vector(1, 3, 2).poly ==
          change_basis(jack(Partition{1, 1}, Rat(1)), Basis::PowerSum));
    CHECK_THROWS(rect_jack_vector(2, 2, 2));
}

TEST_CASE("iterated zero modes are proportional to rectangular Jacks") {
    auto r = verify_theorem_main(1, 1, 1);
    CHECK(r.match);
    CHECK(r.scale != 0);
    CHECK(verify_theorem_main(1, 2, 1).match);
    CHECK(verify_theorem_main(2, 4, 2).match);
    for (long m = 1; m <= 3; ++m)
        for (long k = 1; k <= 3; ++k)
            for (long p = m * k + k; p <= 6; ++p) {
                auto rep = verify_theorem_main(m, p, k);
                CHECK(rep.match);
                CHECK(rep.scale != 0);
            }
}

TEST_CASE("principal space dimensions") {
    CHECK(principal_space(1, 2, 2, Rat(30)).total_dim() == 4);
    CHECK(principal_space(2, 3, 3, Rat(40)).total_dim() == 5);
}

TEST_CASE("principal space dims independent of the shift p") {
    for (long m : {1L, 2L})
        for (long n = 1; n <= 4; ++n) {
            // compare per-bidegree dims relative to the extremal vector
            auto relative = [&](long p) {
                std::map<std::pair<long, long>, long> rel;
                auto sp = principal_space(m, p, n, extremal_energy(m, p) + Rat(12));
                for (const auto& [key, d] : sp.dims())
                    rel[{key.first + p, key.second}] = d;
                return rel;
            };
            auto base = relative(n);
            CHECK(relative(n + 1) == base);
            CHECK(relative(n + 3) == base);
        }
}

TEST_CASE("closure of zero-mode vectors under annihilators, vs Jack spans") {
    auto r1 = verify_theorem_jack(1, 2, 1);
    CHECK(r1.equal);
    CHECK(r1.closure_dims == std::map<long, long>{{0, 1}, {1, 1}});
    auto r2 = verify_theorem_jack(2, 4, 1);
    CHECK(r2.equal);
    CHECK(r2.closure_dims == std::map<long, long>{{0, 1}, {1, 1}, {2, 1}, {3, 1}});
    auto r3 = verify_theorem_jack(1, 3, 2);
    CHECK(r3.equal);
    long total = 0;
    for (auto& [d, v] : r3.closure_dims) total += v;
    CHECK(total == 3);
    for (long m = 1; m <= 2; ++m)
        for (long k = 1; k <= 2; ++k)
            for (long p = m * k + k; p <= 5; ++p) CHECK(verify_theorem_jack(m, p, k).equal);
}

TEST_CASE("closure contains all nonpositive-window monomials") {
    for (long m = 1; m <= 2; ++m)
        for (long k = 1; k <= 2; ++k)
            for (long p = m * k + k; p <= 4; ++p) {
                FockVector w = extremal(m, p);
                for (long t = 0; t < k; ++t) w = a_apply(0, w);
                GradedSubspace closure(2 * m);
                closure.add(w);
                // close under h_i
                bool grew = true;
                std::vector<FockVector> frontier{w};
                while (grew) {
                    grew = false;
                    std::vector<FockVector> next;
                    for (const auto& f : frontier)
                        for (long i = 1; i <= f.poly.degree(); ++i) {
                            FockVector g = h_apply(i, f);
                            if (!g.is_zero() && closure.add(g)) {
                                next.push_back(g);
                                grew = true;
                            }
                        }
                    frontier = std::move(next);
                }
                // monomials a_{i_1}..a_{i_k} v_p, 0 <= i_t <= p-1 weakly decreasing
                std::vector<long> idx(k, 0);
                auto rec = [&](auto&& self, long pos, long hi) -> void {
                    if (pos == k) {
                        FockVector u = extremal(m, p);
                        for (long t = k - 1; t >= 0 && !u.is_zero(); --t)
                            u = a_apply(idx[t], u);
                        CHECK(closure.contains(u));
                        return;
                    }
                    for (long i = hi; i >= 0; --i) {
                        idx[pos] = i;
                        self(self, pos + 1, i);
                    }
                };
                rec(rec, 0, p - 1);
            }
}

TEST_CASE("Jack reconstruction from extremal coefficients") {
    CHECK(reconstruct_jack(1, 2, 1, Partition{}) == SymFunc::constant(Rat(1)));
    CHECK(reconstruct_jack(1, 2, 1, Partition{1}) ==
          SymFunc::basis_element(Basis::PowerSum, Partition{1}));
    CHECK(reconstruct_jack(2, 4, 1, Partition{2}) == jack(Partition{2}, Rat(2)));
    for (long m = 1; m <= 2; ++m)
        for (long k = 1; k <= 2; ++k)
            for (long p = m * k + k; p <= 4; ++p) {
                long width = p - (k - 1) * m - 1;
                for (const auto& mu : subdiagrams(static_cast<int>(width), static_cast<int>(k)))
                    CHECK(reconstruct_jack(m, p, k, mu) == jack(mu, Rat(m)));
            }
}

TEST_CASE("odd lattice exploratory dimensions") {
    auto r = odd_principal_dim(1, 1);
    CHECK(r.dim == 2);
    CHECK(r.conjectured == 2);
    auto r2 = odd_principal_dim(1, 2);
    CHECK(r2.conjectured == 4);
    auto r3 = odd_principal_dim(2, 3);
    CHECK(r3.conjectured == 5);
    // reports only; log the computed values through doctest messages
    MESSAGE("odd (1,2): dim ", r2.dim, " vs ", r2.conjectured.get_str());
    MESSAGE("odd (2,3): dim ", r3.dim, " vs ", r3.conjectured.get_str());
}
