#pragma once

#include <vector>

#include "pjack/linalg.hpp"
#include "pjack/rational.hpp"

namespace pjack {

// Ring C[y_1..y_n] / (y_i y_j : |i-j| < m). Basis: subsets of {1..n} with
// pairwise index distance >= m; products with overlapping or too-close
// supports vanish. Dimension is the m-step Fibonacci number.
struct GapRing {
    long m = 1, n = 0;
    std::vector<std::vector<int>> basis;  // sorted subsets, 1-based indices
    // basis index of y_A y_B, or -1 if the product is zero
    long multiply(long a, long b) const;
    long index_of(const std::vector<int>& s) const;
};
GapRing gap_ring(long m, long n);

// Degree-k exponent vectors in n variables, lexicographic.
std::vector<std::vector<int>> mono_basis(long n, long k);

// Row-reduced component of a graded ideal inside the degree-k monomial span.
struct GradedIdealComponent {
    long ambient = 0;  // number of degree-k monomials
    RatMatrix basis;   // RREF rows over mono_basis
    long dim() const { return static_cast<long>(basis.size()); }
};

// Degree-k part of the kernel of C[a_0..a_{n-1}] -> gap_ring(m,n),
// a_i |-> sum_j z_j^i y_j. Coordinates must be pairwise distinct.
GradedIdealComponent kernel_component(long m, long n, const std::vector<Rat>& z, long k);

// Degree-k part of the ideal in C[xi_0..xi_{n-1}] generated by the products
// xi(z_i) xi(z_j), |i-j| < m, with xi(z) = sum_t xi_t z^t truncated at n-1.
GradedIdealComponent xi_ideal_component(long m, long n, const std::vector<Rat>& z, long k);

// Degree-k part of the kernel of C[xi_0..xi_{n-1}] -> quotient algebra
// (computed through normal_form on every monomial).
GradedIdealComponent defining_component(long m, long n, long k);

// Polynomial in a degeneration parameter: coefficients of eps^0, eps^1, ...
using EpsPoly = std::vector<Rat>;

EpsPoly ep_add(const EpsPoly& a, const EpsPoly& b);
EpsPoly ep_sub(const EpsPoly& a, const EpsPoly& b);
EpsPoly ep_mul(const EpsPoly& a, const EpsPoly& b);
bool ep_is_zero(const EpsPoly& a);
long ep_valuation(const EpsPoly& a);  // lowest nonzero power; -1 for zero

// Degeneration family z_1(eps), ..., z_n(eps).
using EpsilonFamily = std::vector<EpsPoly>;

// z_i(eps) = eps + eps^2 + ... + eps^i.
EpsilonFamily canonical_family(long n);

// Coordinates pairwise distinct and vanishing at eps = 0, with each gap
// z_{i+1} - z_i infinitesimal against the previous one (checked by exact
// valuations).
bool family_admissible(const EpsilonFamily& family);

// Rank of a matrix over the rational function field, by fraction-free
// elimination.
long eps_generic_rank(std::vector<std::vector<EpsPoly>> rows);

// eps -> 0 limit of the row space: rows are divided by their eps-content and
// specialized; rank defects are repaired by resaturating combinations that
// vanish at eps = 0. `conclusive` is false if the iteration does not settle.
struct LimitRows {
    bool conclusive = false;
    RatMatrix basis;  // RREF
};
LimitRows eps_limit_rows(std::vector<std::vector<EpsPoly>> rows);

// Limit of xi_ideal_component along the family, as exact eps arithmetic.
struct LimitComponent {
    bool conclusive = false;
    GradedIdealComponent comp;
};
LimitComponent limit_component(long m, long n, const EpsilonFamily& family, long k);

// Limit of kernel_component along the family (coordinates z_i(eps)).
LimitComponent limit_kernel_component(long m, long n, const EpsilonFamily& family, long k);

// Per-degree comparison of the limit of the generic-Z xi ideal against the
// defining ideal of the quotient algebra. Reports only; asserts nothing.
enum class Verdict { Equal, LimitLarger, LimitSmaller, Incomparable, Inconclusive };
struct ConjectureReport {
    std::vector<long> generic_dims;   // xi_ideal_component at the family's z(1/7)
    std::vector<long> limit_dims;     // index = degree k
    std::vector<long> defining_dims;
    std::vector<Verdict> verdicts;
    bool all_equal = false;
};
ConjectureReport conjecture_scan(long m, long n, long k_max, const EpsilonFamily& family);

// Checks that reversing indices (xi_i -> a_{n-1-i}) carries the defining
// ideal component onto the limit of the evaluation kernel.
struct ReindexReport {
    bool conclusive = false;
    bool equal = false;
};
ReindexReport reindex_limit_check(long m, long n, long k, const EpsilonFamily& family);

}  // namespace pjack
