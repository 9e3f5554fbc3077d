#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <string>
#include <utility>

#include "gfib/dyadic.hpp"

namespace gfib {

/// Result of a certified three-valued comparison. Indeterminate means the
/// intervals overlap at the current precision; it is never reported as a
/// violation.
enum class Cert { True, False, Indeterminate };

const char* to_string(Cert c);

/// Immutable arbitrary-precision binary float (thin RAII wrapper over
/// mpfr_t). Used for interval endpoints, midpoints and radii.
class Real {
public:
    explicit Real(mpfr_prec_t prec);
    Real(const Real& other);
    Real(Real&& other) noexcept;
    Real& operator=(const Real& other);
    Real& operator=(Real&& other) noexcept;
    ~Real();

    mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    int sgn() const { return mpfr_sgn(v_); }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }

    Real negated() const;

    static Real from_long(long v, mpfr_prec_t prec);

    friend int cmp(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_); }
    friend bool operator<(const Real& a, const Real& b) { return cmp(a, b) < 0; }
    friend bool operator<=(const Real& a, const Real& b) { return cmp(a, b) <= 0; }
    friend bool operator==(const Real& a, const Real& b) { return cmp(a, b) == 0; }

private:
    mpfr_t v_;
};

/// Certified enclosure of a real number: an interval [lo, hi] with
/// outward-rounded endpoint arithmetic. Every operation returns an interval
/// guaranteed to contain the exact result whenever the inputs contain their
/// exact operands. Result precision is the max of the operand precisions.
class Interval {
public:
    // -- construction -------------------------------------------------------
    static Interval exact_long(long v, mpfr_prec_t prec);
    static Interval exact_integer(const mpz_class& v, mpfr_prec_t prec);
    static Interval from_rational(const mpq_class& v, mpfr_prec_t prec);
    static Interval from_dyadic_bounds(const Dyadic& lo, const Dyadic& hi,
                                       mpfr_prec_t prec);
    /// Endpoints taken as given; requires lo <= hi.
    static Interval from_endpoints(const Real& lo, const Real& hi);

    // -- arithmetic (outward rounded) ---------------------------------------
    friend Interval operator+(const Interval& a, const Interval& b);
    friend Interval operator-(const Interval& a, const Interval& b);
    friend Interval operator*(const Interval& a, const Interval& b);
    /// Throws PrecisionRefinementNeeded if the denominator encloses zero.
    friend Interval operator/(const Interval& a, const Interval& b);

    Interval negated() const;
    Interval abs_value() const;
    /// x^e for integer e. Negative e requires an interval excluding zero.
    Interval pow_int(long e) const;
    /// Natural log; requires lo > 0.
    Interval log() const;

    // -- queries -------------------------------------------------------------
    const Real& lo() const { return lo_; }
    const Real& hi() const { return hi_; }
    mpfr_prec_t precision() const { return lo_.precision(); }

    Real mid() const;
    Real radius() const;  // upper bound of (hi - lo) / 2
    Real width() const;   // upper bound of hi - lo
    double log2_width() const;

    bool is_point() const { return cmp(lo_, hi_) == 0; }
    bool contains_zero() const { return lo_.sgn() <= 0 && hi_.sgn() >= 0; }
    bool contains(const mpz_class& v) const;
    bool contains(const mpq_class& v) const;

    /// Smallest integer >= lo (exact).
    mpz_class ceil_lo() const;
    /// Largest integer <= hi (exact).
    mpz_class floor_hi() const;

private:
    Interval(Real lo, Real hi) : lo_(std::move(lo)), hi_(std::move(hi)) {}

    Real lo_;
    Real hi_;
};

/// Certified a <= b: True when it provably holds for the enclosed reals,
/// False when it provably fails, Indeterminate otherwise.
Cert cert_le(const Interval& a, const Interval& b);

/// Certified a < b.
Cert cert_lt(const Interval& a, const Interval& b);

/// Whether the two enclosures overlap. Two enclosures of the same real
/// number always do.
bool intersects(const Interval& a, const Interval& b);

}  // namespace gfib
