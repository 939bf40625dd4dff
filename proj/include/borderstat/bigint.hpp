#pragma once

#include <gmpxx.h>

#include <string>

namespace borderstat {

// Word counts grow like alphabet^n, so counting is done in exact
// arbitrary-precision integers throughout; probabilities and error
// radii are exact rationals.
using BigCount = mpz_class;
using Rational = mpq_class;

inline BigCount pow_big(unsigned long base, unsigned long exp) {
    BigCount out;
    mpz_ui_pow_ui(out.get_mpz_t(), base, exp);
    return out;
}

// base^exp as an exact rational, exp may be negative.
inline Rational pow_rational(unsigned long base, long exp) {
    BigCount p = pow_big(base, static_cast<unsigned long>(exp < 0 ? -exp : exp));
    Rational out = exp < 0 ? Rational(1, p) : Rational(p);
    out.canonicalize();
    return out;
}

inline Rational make_ratio(const BigCount& num, const BigCount& den) {
    Rational out(num, den);
    out.canonicalize();
    return out;
}

}  // namespace borderstat
