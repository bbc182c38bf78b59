#pragma once

#include <vector>

#include "pjack/qseries.hpp"
#include "pjack/rational.hpp"

namespace pjack {

// All characters use z-exponents in integer charge units (one unit is
// 1/sqrt(2m)) and exact rational q-exponents, so they compare bit-exactly
// with the Fock-side computations.

// Character of the quadratic algebra: sum_k z^k q^{mk(k-1)} / (q)_k. Here
// the z-exponent is the plain generator count k.
QSeries ch_A(long m, long k_max, long q_max);

// Principal-subspace character with its extremal prefactor:
// z^{m-1} q^{-(m-1)^2/4m} sum_k z^{2mk} q^{mk^2} / (q)_k.
QSeries ch_principal(long m, long k_max, long q_max);

// Finitized principal subspace: z^{-p} sum_k z^{2mk} q^{deg_q v_{p-2mk}}
// qbinom(p-(m-1)(k-1), k). A finite sum.
QSeries ch_finite(long m, long p, long q_max);

// Coinvariants: z^{m-1} q^{-(m-1)^2/4m} sum_k z^{2mk} q^{mk^2}
// qbinom(n-(2m-1)(k-1), k). A finite sum.
QSeries ch_coinv(long m, long n, long q_max);

// Character of the direct sum of Fock sectors with charge congruent to i
// mod 2m: sum_n z^{2nm+i} q^{energy(2nm+i)} / (q)_infinity, truncated so
// that all coefficients with q-exponent <= q_max are final.
QSeries ch_L(long m, long i, long q_max);

// Semi-infinite {0,1}-sequence: an eventual arithmetic tail of ones starting
// at position -i + 2m*tail_n - 1 together with finitely many extra ones
// strictly below it, all pairwise gaps >= 2m.
struct SemiInfinite {
    long tail_n = 0;
    std::vector<long> extras;  // strictly decreasing positions
    long charge = 0;           // charge of the attached vector
    Rat energy;                // its q-degree
};

// All sequences whose attached vector has q-degree <= cutoff; counts per
// (charge, energy) must reproduce ch_L(m, i).
std::vector<SemiInfinite> enumerate_semiinfinite(long m, long i, long cutoff);

}  // namespace pjack
