#pragma once

#include <gmpxx.h>
#include <string>

namespace gq {

/// Exact arbitrary-precision rational; the only coefficient type of the kernel.
/// Floating point is deliberately absent: every identity checked here is exact.
using Rational = mpq_class;

inline std::string to_string(const Rational& r) { return r.get_str(); }

inline Rational rational(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

} // namespace gq
