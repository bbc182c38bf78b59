#pragma once

#include <map>
#include <vector>

#include "pjack/linalg.hpp"
#include "pjack/qseries.hpp"
#include "pjack/symfunc.hpp"

namespace pjack {

// Vector in a charged Fock sector, identified with symmetric functions.
// `lattice` is the squared norm of the lattice generator (2m in the even
// case, 2m-1 in the odd one); the sector is indexed by an integer charge c
// meaning H_{c/sqrt(lattice)}. All scalars are rational: the square roots of
// the identification are absorbed into the operator normalizations.
struct FockVector {
    long lattice = 2;
    long charge = 0;
    SymFunc poly;  // power-sum basis

    bool is_zero() const { return poly.is_zero(); }
};

// Conformal energy of the sector bottom: c^2/(2L) + (2-L)c/(2L).
Rat sector_energy(long lattice, long charge);

// Highest-weight vector v_p of the even-lattice theory (lattice 2m), sector
// charge -p, poly 1.
FockVector extremal(long m, long p);
Rat extremal_energy(long m, long p);  // = sector_energy(2m, -p)

// Heisenberg modes under the identification: h_apply(-i) multiplies by p_i,
// h_apply(i) is i*d/dp_i for i > 0 (scalings absorbed so [h_1, h_{-1}] = 1).
// Charge unchanged.
FockVector h_apply(long i, const FockVector& v);

// Vertex operator mode a_n: raises the charge by `lattice` and lowers the
// q-degree by n. Exact: the result of a mode on a polynomial vector is a
// finite sum. Normalized so that a_{p-1} v_p = v_{p-2m}.
FockVector a_apply(long n, const FockVector& v);

// q-degree of a homogeneous vector (sector energy + polynomial degree).
Rat q_degree(const FockVector& v);

// Graded subspace of a fixed lattice theory: per (charge, polynomial degree)
// a row space over the partitions of that degree.
class GradedSubspace {
public:
    explicit GradedSubspace(long lattice) : lattice_(lattice) {}

    // returns true if v was independent of the current span
    bool add(const FockVector& v);
    bool contains(const FockVector& v) const;

    long lattice() const { return lattice_; }
    long total_dim() const;
    std::map<std::pair<long, long>, long> dims() const;  // (charge, degree) -> dim
    // character with z in charge units (1/sqrt(lattice)) and exact q-exponents
    QSeries character() const;

    bool operator==(const GradedSubspace& o) const;

private:
    long lattice_;
    std::map<std::pair<long, long>, RowSpace> blocks_;
};

// The vector J-hat of the rectangular Jack polynomial
// J_{((p-m(k-1)-1)^k)}(m; x) in sector charge -p + 2mk.
FockVector rect_jack_vector(long m, long p, long k);

// Compares a_0^k v_p with rect_jack_vector(m,p,k); on success `match` is
// true and scale is the nonzero constant of proportionality.
struct MainTheoremReport {
    bool match = false;
    Rat scale;
};
MainTheoremReport verify_theorem_main(long m, long p, long k);

// Span of all monomials a_{i_1}...a_{i_k} v_p with p-window >= i_1 >= ... and
// i_t >= p - window (window < 0 means unbounded below), restricted to
// q-degree <= cutoff.
GradedSubspace principal_space(long m, long p, long window, const Rat& cutoff);

// Checks that the closure of a_0^k v_p under the annihilation half of the
// Heisenberg algebra equals the span of J-hat_mu over subdiagrams mu of the
// rectangle ((p-(k-1)m-1)^k). The same row reduction also certifies that
// C[d/dp_1, d/dp_2, ...] J_rect is spanned by the J_mu.
struct JackBasisReport {
    bool equal = false;
    std::map<long, long> closure_dims;  // polynomial degree -> dim
    std::map<long, long> jack_dims;
};
JackBasisReport verify_theorem_jack(long m, long p, long k);

// Recovers J_mu from the scalars c(i_1,...,i_r) = coefficient of the
// extremal vector in h_{i_1}...h_{i_r} J-hat_mu; must equal jack(mu, m).
SymFunc reconstruct_jack(long m, long p, long k, const Partition& mu);

// Odd-lattice exploration: dimension of the exterior-algebra span
// Lambda(a_{p-1},...,a_{p-n}) v at lattice 2m-1, reported against the
// conjectured generalized Fibonacci count. Never asserted.
struct OddDimReport {
    long dim = 0;
    Int conjectured;
};
OddDimReport odd_principal_dim(long m, long n);

// Quadratic relation generator: coefficient of z^s in (phi^+(z)^{(i)})^2
// applied to v, phi^+(z) = sum_{t>=0} a_{-m-t} z^t.
FockVector relation_generator_apply(long m, long i, long s, const FockVector& v);

}  // namespace pjack
