#pragma once

#include <gmpxx.h>

#include "ddecomp/error.hpp"
#include "ddecomp/family.hpp"

namespace ddecomp {

namespace detail {
inline mpz_class ipow(const mpz_class& base, long n) {
    mpz_class out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(n));
    return out;
}
}  // namespace detail

// 6 (4td + 4d)^n: region cap for n-parameter polynomial families.
inline mpz_class warren_bound(long t, long d, long n) {
    if (t < 1 || d < 0 || n < 1) throw DomainError("warren_bound: t >= 1, d >= 0, n >= 1");
    return 6 * detail::ipow(mpz_class(4 * t * d + 4 * d), n);
}

// (q^2 + q + 2) / 2: components of the complement of a degree-q plane curve.
inline mpz_class curve_complement_bound(long q) {
    if (q < 0) throw DomainError("curve_complement_bound: q >= 0");
    mpz_class num = mpz_class(q) * q + q + 2;
    if (num % 2 != 0) throw Error("curve_complement_bound: odd numerator");
    return num / 2;
}

// Two-parameter cap with q = 2td + 2d.
inline mpz_class planar_bound(long t, long d) {
    if (t < 1 || d < 0) throw DomainError("planar_bound: t >= 1, d >= 0");
    return curve_complement_bound(2 * t * d + 2 * d);
}

// Matrix-family two-parameter cap: q = 2 t^2 d continuous, 2 t^2 d + 2 t d
// discrete.
inline mpz_class matrix_planar_bound(long t, long d, TimeDomain td) {
    if (t < 1 || d < 0) throw DomainError("matrix_planar_bound: t >= 1, d >= 0");
    long q = td == TimeDomain::continuous ? 2 * t * t * d : 2 * t * t * d + 2 * t * d;
    return curve_complement_bound(q);
}

// Matrix-family n-parameter cap: 6 (4 t^2 d)^n continuous,
// 6 (4 t^2 d + 4 t d)^n discrete.
inline mpz_class matrix_warren_bound(long t, long d, long n, TimeDomain td) {
    if (t < 1 || d < 0 || n < 1)
        throw DomainError("matrix_warren_bound: t >= 1, d >= 0, n >= 1");
    long base = td == TimeDomain::continuous ? 4 * t * t * d : 4 * t * t * d + 4 * t * d;
    return 6 * detail::ipow(mpz_class(base), n);
}

}  // namespace ddecomp
