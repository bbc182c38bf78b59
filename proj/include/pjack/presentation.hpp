#pragma once

#include <map>
#include <utility>
#include <vector>

#include "pjack/rational.hpp"

namespace pjack {

// Monomial in the generators xi_0, xi_1, ...: weakly increasing index list.
// Bidegree (k, s) = (length, index sum). Admissible when consecutive gaps
// are all >= 2m.
using XiMonomial = std::vector<int>;
using XiPoly = std::map<XiMonomial, Rat>;

bool xi_admissible(long m, const XiMonomial& w);

// Quadratic relation: coefficient of z^{s-2i} in the square of the i-th
// derivative of xi(z) = sum_t xi_t z^t, as a sum over ordered pairs
// (t1, t2), t1 + t2 = s, with falling-factorial coefficients.
XiPoly relation_generator(long m, long i, long s);

// Number of partitions of s - m k(k-1) into at most k parts.
long graded_dim(long m, long k, long s);

// Image in the quotient algebra expressed over the admissible basis.
XiPoly normal_form(long m, const XiPoly& w);
XiPoly xi_multiply(const XiPoly& a, const XiPoly& b);

// Dimension of the relation span inside bidegree (k, s), by row reduction.
// graded_dim must equal (#monomials - this).
long relation_rank(long m, long k, long s);
long monomial_count(long k, long s);
std::vector<XiMonomial> bidegree_monomials(long k, long s);

// Free fermion realization: 2m colors of anticommuting modes psi_c(j).
// A word is a normally ordered list of (color, mode) pairs.
using FermionWord = std::vector<std::pair<int, int>>;
using FermionPoly = std::map<FermionWord, Rat>;

// Expansion of the product xi~_{i_1} ... xi~_{i_k}, where xi~_i is the
// coefficient of z^i in psi_1(z)...psi_{2m}(z) (sum over compositions of i
// into 2m nonnegative parts).
FermionPoly fermion_xi_product(long m, const std::vector<int>& indices);

// Basis of the quotient by the span of xi_i * (algebra), i > N: admissible
// monomials with top index <= N, independence verified per bidegree.
struct CoinvariantReport {
    bool independent = false;
    std::vector<XiMonomial> basis;
    std::map<std::pair<long, long>, long> dims;  // bidegree -> count
};
CoinvariantReport coinvariant_basis(long m, long top, long k_max, long s_max);

// Dimension of the subalgebra generated by xi_0..xi_{n-1}, by closing
// degree layers under normal_form until a layer dies.
long finitization_dim(long m, long n);

// Checks xi_0 xi_i = 0 for i < 2m and that prepending xi_0 after shifting
// indices by 2m maps admissible monomials to admissible monomials.
struct ShiftReport {
    bool annihilation_ok = false;
    bool shift_ok = false;
};
ShiftReport embed_shift_check(long m, const std::vector<XiMonomial>& samples);

}  // namespace pjack
