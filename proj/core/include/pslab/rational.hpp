#pragma once

#include <gmpxx.h>

#include <string>

#include "pslab/errors.hpp"

namespace pslab {

/// Exact rational coefficients. All arithmetic in the project is exact;
/// nothing is ever rounded or approximated.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Parses "p", "-p" or "p/q" (q > 0). Used by the expression parser and the
/// cache deserializer.
inline Rational parse_rational(const std::string& text) {
    Rational q;
    if (q.set_str(text, 10) != 0)
        throw InputError("invalid rational literal: '" + text + "'");
    if (sgn(q.get_den()) <= 0)
        throw InputError("rational denominator must be positive: '" + text + "'");
    q.canonicalize();
    return q;
}

} // namespace pslab
