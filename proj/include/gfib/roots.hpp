#pragma once

#include "gfib/dyadic.hpp"
#include "gfib/interval.hpp"
#include "gfib/order.hpp"

namespace gfib {

/// Extra working bits granted to interval arithmetic on top of an
/// enclosure's certified width, so endpoint rounding never dominates.
inline constexpr long kPrecisionGuardBits = 32;

/// Certified bracket of the unique root q in (1/2, 1) of
/// q + q^2 + ... + q^d = 1. Both endpoints are exact dyadic rationals with
/// certified signs: f(lo) < 0 < f(hi) for f(q) = q + ... + q^d - 1.
struct RootEnclosure {
    Order d;
    Dyadic lo;
    Dyadic hi;
    long precision_bits;  // hi - lo <= 2^-precision_bits

    /// Outward-rounded interval view at the given working precision.
    Interval to_interval(mpfr_prec_t prec) const;
    /// Interval view at precision_bits + kPrecisionGuardBits.
    Interval to_interval() const;
};

enum class BlackwellMethod { ReciprocalMean, ClosedForm };

/// Bisection with exact dyadic sign tests; the returned bracket satisfies
/// every RootEnclosure invariant unconditionally. Deterministic.
RootEnclosure solve_q(Order d, long precision_bits);

/// Enclosure of E[X1] = sum_{i=1..d} i q^i.
Interval mean_lifetime(const RootEnclosure& enc);

/// Enclosure of the renewal density limit c_d, by 1/E[X1] or by the closed
/// rational form (q-1)^2 / (d q^{d+2} - (d+1) q^{d+1} + q). The two methods
/// enclose the same real number. ClosedForm throws PrecisionRefinementNeeded
/// if its denominator cannot be separated from zero at this precision.
Interval blackwell_constant(const RootEnclosure& enc, BlackwellMethod method);

/// Enclosure of (1/q)^d - (1/q)^{d-1} - ... - (1/q) - 1; contains zero since
/// 1/q is a characteristic root.
Interval characteristic_residual(const RootEnclosure& enc);

}  // namespace gfib
