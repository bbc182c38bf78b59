#pragma once

#include <map>
#include <vector>

#include "pjack/partition.hpp"
#include "pjack/rational.hpp"

namespace pjack {

enum class Basis { Monomial, PowerSum };

// Finite linear combination of monomial- or power-sum-basis symmetric
// functions with exact coefficients. Inhomogeneous values are allowed;
// operators act componentwise by degree.
class SymFunc {
public:
    SymFunc() : basis_(Basis::PowerSum) {}
    explicit SymFunc(Basis b) : basis_(b) {}

    static SymFunc constant(const Rat& c, Basis b = Basis::PowerSum) {
        SymFunc f(b);
        f.add_term(Partition{}, c);
        return f;
    }
    // Single basis element m_la or p_la.
    static SymFunc basis_element(Basis b, const Partition& la) {
        SymFunc f(b);
        f.add_term(la, Rat(1));
        return f;
    }

    Basis basis() const { return basis_; }
    const std::map<Partition, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    long degree() const;  // max |la| over terms; 0 when zero

    void add_term(const Partition& la, const Rat& c) {
        if (c == 0) return;
        auto it = terms_.find(la);
        if (it == terms_.end()) {
            terms_.emplace(la, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    Rat coeff(const Partition& la) const {
        auto it = terms_.find(la);
        return it == terms_.end() ? Rat(0) : it->second;
    }

    SymFunc operator+(const SymFunc& o) const;
    SymFunc operator-(const SymFunc& o) const;
    SymFunc operator*(const Rat& c) const;
    bool operator==(const SymFunc& o) const;  // compares in power-sum basis

    SymFunc homogeneous_component(long d) const;

private:
    Basis basis_;
    std::map<Partition, Rat> terms_;
};

// Newton-identity conversion between the bases; round trip is the identity.
SymFunc change_basis(const SymFunc& f, Basis target);

// Exact product, performed in the power-sum basis (free polynomial algebra).
SymFunc multiply(const SymFunc& f, const SymFunc& g);

// The alpha-deformed pairing: power sums orthogonal,
// <p_1^{i_1}...p_k^{i_k}, same> = alpha^{-sum i_s} * prod s^{i_s} i_s!.
Rat inner_alpha(const SymFunc& f, const SymFunc& g, const Rat& alpha);

// Formal partial derivative with respect to p_k.
SymFunc d_powersum(int k, const SymFunc& f);

// T_n(f) = L(d^n f / d x_1^n |_{x_1=0}), computed by realizing f in N
// variables (requires N >= deg f + 1). Result in the monomial basis.
SymFunc t_extract(int n, const SymFunc& f, int num_vars);

// T_n computed intrinsically in power-sum coordinates via the cached
// coefficient table b_{j,n}. Result in the power-sum basis.
SymFunc t_powersum(int n, const SymFunc& f);

// Coefficient of (d^j f / dp_{k_1}..dp_{k_j}) in T_n, summed over ordered
// tuples with the given sorted form. Exposed for inspection and tests.
const std::map<std::vector<int>, Rat>& t_coefficient_table(int n);

// Expands f into an explicit polynomial in x_1..x_N (exponent vector ->
// coefficient). Exposed for the reconstruction-identity check.
std::map<std::vector<int>, Rat> expand_in_variables(const SymFunc& f, int num_vars);

// z_la = prod_k k^{m_k} m_k! (the power-sum norm factor at alpha = 1).
Rat z_factor(const Partition& la);

}  // namespace pjack
