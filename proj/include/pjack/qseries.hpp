#pragma once

#include <map>
#include <optional>
#include <utility>

#include "pjack/rational.hpp"

namespace pjack {

// Bivariate exact series in z and q. z-exponents are kept in integer
// "charge units" u, meaning z-degree u/sqrt(2m); the irrational sqrt(2m)
// is never materialized. q-exponents are exact rationals.
//
// truncation(): largest q-exponent guaranteed correct, or nullopt when the
// series is exact (a polynomial). Arithmetic takes the min over operands.
class QSeries {
public:
    using Key = std::pair<long, Rat>;  // (z charge units, q exponent)

    QSeries() = default;
    explicit QSeries(std::optional<Rat> truncation) : trunc_(std::move(truncation)) {}

    static QSeries one() {
        QSeries s;
        s.add_term(0, Rat(0), 1);
        return s;
    }

    const std::map<Key, Int>& terms() const { return terms_; }
    const std::optional<Rat>& truncation() const { return trunc_; }

    bool within(const Rat& q_exp) const { return !trunc_ || q_exp <= *trunc_; }

    void add_term(long z_units, const Rat& q_exp, const Int& coeff) {
        if (coeff == 0 || !within(q_exp)) return;
        auto it = terms_.find({z_units, q_exp});
        if (it == terms_.end()) {
            terms_.emplace(Key{z_units, q_exp}, coeff);
        } else {
            it->second += coeff;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Int coeff(long z_units, const Rat& q_exp) const {
        auto it = terms_.find({z_units, q_exp});
        return it == terms_.end() ? Int(0) : it->second;
    }

    QSeries operator+(const QSeries& o) const;
    QSeries operator-(const QSeries& o) const;
    QSeries operator*(const QSeries& o) const;
    bool operator==(const QSeries& o) const { return terms_ == o.terms_; }

    // Scales every exponent: z_units += du, q_exp += dq.
    QSeries shifted(long du, const Rat& dq) const;

    // Sum of coefficients (z = q = 1), only meaningful for polynomials.
    Int value_at_one() const;

private:
    std::map<Key, Int> terms_;
    std::optional<Rat> trunc_;  // nullopt = exact everywhere
};

// Gaussian binomial [a choose b]_q as an exact q-polynomial (z-degree 0).
// a < b gives 0; negative arguments are a domain error.
QSeries qbinomial(int a, int b);

// Generalized Fibonacci numbers: F_i = i+1 for i < m, F_{i+m} = F_{i+m-1} + F_i.
Int fibonacci_m(int m, int n);

}  // namespace pjack
