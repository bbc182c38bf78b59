#pragma once

#include <map>

#include "pjack/symfunc.hpp"

namespace pjack {

// Monic Jack polynomial J_la(alpha): unit coefficient on m_la, lower
// dominance terms only, orthogonal under inner_alpha. Monomial basis.
SymFunc jack(const Partition& la, const Rat& alpha);

// <J_la, J_la>_alpha, always nonzero for alpha > 0.
Rat jack_norm_sq(const Partition& la, const Rat& alpha);

// Coefficients f^la_{mu nu} defined by
//   J_mu J_nu N_mu^{-1} N_nu^{-1} = sum_la N_la^{-1} f^la_{mu nu} J_la,
// N = norm squared. Table keyed by nu, all |nu| = |la| - |mu|.
std::map<Partition, Rat> skew_coefficients(const Partition& la, const Partition& mu,
                                           const Rat& alpha);

// One-variable specialization of the skew polynomial J_{la/mu}(x1). It is
// phi * x1^e when la/mu is a horizontal strip (at most one box per column),
// zero otherwise; decided directly from the f-coefficients.
struct SkewOneVar {
    bool nonzero = false;
    Rat phi;
    long exponent = 0;
};
SkewOneVar skew_onevar(const Partition& la, const Partition& mu, const Rat& alpha);

// Checks T_k J_la = k! sum_mu phi_{la mu} J_mu over single-row removals of
// k boxes. Both sides computed by independent routes.
struct PieriTJReport {
    bool equal = false;
    std::map<Partition, Rat> phi;  // mu -> phi_{la mu}
};
PieriTJReport pieri_tj_check(const Partition& la, int k, const Rat& alpha);

}  // namespace pjack
