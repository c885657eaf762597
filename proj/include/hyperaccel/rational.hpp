#pragma once
#include <gmpxx.h>
#include <string>

namespace hyperaccel {

// mpq_class is the ExactRational of the whole library: gmp keeps it
// gcd-reduced with positive denominator, which is exactly the invariant we
// need (canonical zero is 0/1).
using Rat = mpq_class;
using Int = mpz_class;

inline Int pow10z(long e) {
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, static_cast<unsigned long>(e));
    return r;
}

// x^e for integer e, e < 0 allowed (x must be nonzero then)
Rat rat_pow(const Rat& x, long e);

// "p/q" (or just "p" for integers)
std::string rat_string(const Rat& x);

// nearest integer to x*10^scale, ties away from zero
Int scaled_round(const Rat& x, long scale);

// plain decimal rendering with `digits` digits after the point (round-to-nearest)
std::string decimal_string(const Rat& x, long digits);

} // namespace hyperaccel
