#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace pjack {

// All scalar arithmetic in the engine is exact. mpq_class keeps values
// canonical (lowest terms, positive denominator) after every operation.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rat: zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Parses "num" or "num/den".
inline Rat rat_parse(const std::string& s) {
    auto slash = s.find('/');
    Rat r;
    if (slash == std::string::npos) {
        r = Rat(s);
    } else {
        r = Rat(s.substr(0, slash)) / Rat(s.substr(slash + 1));
    }
    r.canonicalize();
    return r;
}

inline std::string rat_str(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline Int factorial(unsigned n) {
    Int f = 1;
    for (unsigned i = 2; i <= n; ++i) f *= static_cast<long>(i);
    return f;
}

// Falling factorial x(x-1)...(x-k+1); k = 0 gives 1.
inline Int falling(long x, unsigned k) {
    Int f = 1;
    for (unsigned i = 0; i < k; ++i) f *= (x - static_cast<long>(i));
    return f;
}

inline Int binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Int b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return b;
}

}  // namespace pjack
