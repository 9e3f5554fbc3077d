#pragma once

#include <gmpxx.h>

#include "gfib/interval.hpp"
#include "gfib/order.hpp"

namespace gfib {

// The headline closed form: F_n is the nearest integer to c_d * q^{-(n-1)}.
// `approx` encloses c_d * q^{-(n-1)}. When `certified` is true, `rounded` is
// the only integer in the window [approx.lo - B, approx.hi + B], where B is
// an outward-rounded evaluation of the theorem bound on |F_n - c_d q^{-(n-1)}|;
// since F_n provably lies in that window, rounded = F_n unconditionally.
struct ClosedFormValue {
    Order d;
    long long n;
    Interval approx;
    mpz_class rounded;
    bool certified;
    long precision_bits;  // working precision that achieved certification
};

// x_n = F_n - c_d * q^{-(n-1)} together with the geometric bound
// (1-q) * ((1-q)/q)^{n-1}. For n <= 0 the theorem does not apply and `bound`
// carries the formal cap 1/2 (the rounding guarantee still holds there
// because |x_n| = c_d * q^{1-n} <= c_d * q < 1/2).
struct ErrorRecord {
    Order d;
    long long n;
    Interval x_n;
    Interval bound;
};

// Enclosure of c_d * q^{-(n-1)} at the given working precision.
Interval approx_value(Order d, long long n, long precision_bits);

// Enclosure of the theorem bound (1-q)((1-q)/q)^{n-1} for n >= 1; the exact
// point 1/2 for n <= 0 (formal cap, see ErrorRecord).
Interval theorem_bound(Order d, long long n, long precision_bits);

// Certified nearest-integer evaluation. Starts at required_precision(d, n)
// (rounded up to a power of two), doubles until the certification window
// isolates a single integer, and throws PrecisionCeilingError if the
// configured ceiling is reached first. For n <= 0 returns rounded = 0
// without computing the root.
ClosedFormValue fib_closed(Order d, long long n);

// x_n and its bound, both as enclosures at the given working precision.
ErrorRecord error_term(Order d, long long n, long precision_bits);

// A precision budget sufficient for the magnitude of c_d * q^{-(n-1)}:
// ceil(n * log2(1/q_lo)) + 32 guard bits, with q_lo taken from a 64-bit
// baseline enclosure. Monotone nondecreasing in n. Requires n >= 1.
long required_precision(Order d, long long n);

}  // namespace gfib
