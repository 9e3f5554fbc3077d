#include "gfib/closedform.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "gfib/errors.hpp"
#include "gfib/exact.hpp"
#include "gfib/roots.hpp"

namespace gfib {

namespace {

Interval approx_from_enclosure(const RootEnclosure& enc, long long n) {
    const Interval q = enc.to_interval();
    const Interval c = blackwell_constant(enc, BlackwellMethod::ReciprocalMean);
    return c * q.pow_int(static_cast<long>(1 - n));  // q^{-(n-1)}
}

Interval bound_from_enclosure(const RootEnclosure& enc, long long n) {
    const Interval q = enc.to_interval();
    const Interval one = Interval::exact_long(1, q.precision());
    const Interval omq = one - q;
    return omq * (omq / q).pow_int(static_cast<long>(n - 1));
}

long next_pow2_at_least(long v) {
    long p = 64;
    while (p < v) p <<= 1;
    return p;
}

}  // namespace

Interval approx_value(Order d, long long n, long precision_bits) {
    return approx_from_enclosure(solve_q(d, precision_bits), n);
}

Interval theorem_bound(Order d, long long n, long precision_bits) {
    if (precision_bits < 8) throw std::invalid_argument("precision_bits must be >= 8");
    if (n <= 0) {
        // Formal cap: the geometric bound only covers n >= 1. 1/2 is dyadic,
        // so this is a point interval.
        return Interval::from_rational(
            mpq_class(1, 2),
            static_cast<mpfr_prec_t>(precision_bits + kPrecisionGuardBits));
    }
    return bound_from_enclosure(solve_q(d, precision_bits), n);
}

ClosedFormValue fib_closed(Order d, long long n) {
    if (n <= 0) {
        // F_n = 0 and |F_n - c_d q^{-(n-1)}| = c_d q^{1-n} <= c_d q < 1/2,
        // so rounding to 0 is certain a priori; the enclosure [0, 1/2]
        // holds without touching the root.
        const auto prec = static_cast<mpfr_prec_t>(kDefaultPrecisionBits);
        Real lo(prec);
        Real half(prec);
        mpfr_set_ui_2exp(half.raw(), 1, -1, MPFR_RNDU);
        return ClosedFormValue{d,    n,    Interval::from_endpoints(lo, half),
                               0,    true, kDefaultPrecisionBits};
    }

    long p = next_pow2_at_least(std::max(required_precision(d, n), 64L));
    while (true) {
        if (p > max_precision_bits())
            throw PrecisionCeilingError(
                "fib_closed(d=" + std::to_string(d.value()) + ", n=" + std::to_string(n) +
                "): needs " + std::to_string(p) + " bits, ceiling is " +
                std::to_string(max_precision_bits()));
        const RootEnclosure enc = solve_q(d, p);
        const Interval approx = approx_from_enclosure(enc, n);
        const Interval bound = bound_from_enclosure(enc, n);
        // F_n lies in [approx.lo - bound.hi, approx.hi + bound.hi]; rounding
        // is certified once that window holds exactly one integer.
        const Interval spread =
            Interval::from_endpoints(bound.hi().negated(), bound.hi());
        const Interval window = approx + spread;
        const mpz_class first = window.ceil_lo();
        const mpz_class last = window.floor_hi();
        if (first == last)
            return ClosedFormValue{d, n, approx, first, true, p};
        if (p >= max_precision_bits())
            throw PrecisionCeilingError(
                "fib_closed(d=" + std::to_string(d.value()) + ", n=" + std::to_string(n) +
                "): certification not reached at the precision ceiling " +
                std::to_string(max_precision_bits()));
        p = std::min(2 * p, max_precision_bits());
    }
}

ErrorRecord error_term(Order d, long long n, long precision_bits) {
    if (precision_bits < 8) throw std::invalid_argument("precision_bits must be >= 8");
    const mpz_class fn = fib_at(d, n);
    const Interval approx = approx_value(d, n, precision_bits);
    const Interval x = Interval::exact_integer(fn, approx.precision()) - approx;
    return ErrorRecord{d, n, x, theorem_bound(d, n, precision_bits)};
}

long required_precision(Order d, long long n) {
    if (n < 1) throw std::invalid_argument("required_precision: n must be >= 1");
    const RootEnclosure base = solve_q(d, 64);
    const Interval q = base.to_interval();
    const Interval growth =
        (Interval::exact_long(1, q.precision()) / q).pow_int(static_cast<long>(n));
    // mpfr exponent convention: value = m * 2^e with 1/2 <= |m| < 1, so
    // e >= ceil(log2 value); evaluated on the upper endpoint this dominates
    // ceil(n * log2(1/q_lo)).
    const long magnitude = static_cast<long>(mpfr_get_exp(growth.hi().raw()));
    return magnitude + kPrecisionGuardBits;
}

}  // namespace gfib
