#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>

namespace bachet {

/// Arbitrary-precision integer used for part values, sums and counts.
using Int = mpz_class;

/// base^exp as an exact integer.
inline Int pow_ui(unsigned long base, unsigned long exp) {
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
    return r;
}

/// ceil(a / b), b > 0.
inline Int ceil_div(const Int& a, const Int& b) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

/// Conversion used to size tables; rejects negatives and values that do not
/// fit rather than silently truncating.
inline std::size_t to_index(const Int& v) {
    if (v < 0 || !v.fits_ulong_p())
        throw std::overflow_error("bachet: value does not fit in a table index");
    return static_cast<std::size_t>(v.get_ui());
}

}  // namespace bachet
