#include "gfib/interval.hpp"

#include <atomic>
#include <cassert>
#include <stdexcept>

#include "gfib/errors.hpp"

namespace gfib {

namespace {
std::atomic<long> g_max_precision_bits{kDefaultMaxPrecisionBits};
}

long max_precision_bits() { return g_max_precision_bits.load(); }

void set_max_precision_bits(long bits) {
    if (bits < 8) throw std::invalid_argument("precision ceiling must be >= 8 bits");
    g_max_precision_bits.store(bits);
}

const char* to_string(Cert c) {
    switch (c) {
        case Cert::True: return "true";
        case Cert::False: return "false";
        case Cert::Indeterminate: return "indeterminate";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Real

Real::Real(mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }

Real::Real(const Real& other) {
    mpfr_init2(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, MPFR_RNDN);  // exact: same precision
}

Real::Real(Real&& other) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, other.v_);
}

Real& Real::operator=(const Real& other) {
    if (this != &other) {
        mpfr_set_prec(v_, mpfr_get_prec(other.v_));
        mpfr_set(v_, other.v_, MPFR_RNDN);
    }
    return *this;
}

Real& Real::operator=(Real&& other) noexcept {
    if (this != &other) mpfr_swap(v_, other.v_);
    return *this;
}

Real::~Real() { mpfr_clear(v_); }

Real Real::negated() const {
    Real r(precision());
    mpfr_neg(r.v_, v_, MPFR_RNDN);  // exact
    return r;
}

Real Real::from_long(long v, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_si(r.raw(), v, MPFR_RNDN);
    return r;
}

// ---------------------------------------------------------------------------
// Interval

namespace {

mpfr_prec_t join_prec(const Interval& a, const Interval& b) {
    return std::max(a.precision(), b.precision());
}

void set_dyadic(mpfr_ptr rop, const Dyadic& d, mpfr_rnd_t rnd) {
    mpfr_set_z_2exp(rop, d.mantissa.get_mpz_t(), -d.exponent, rnd);
}

}  // namespace

Interval Interval::exact_long(long v, mpfr_prec_t prec) {
    Real lo(prec), hi(prec);
    mpfr_set_si(lo.raw(), v, MPFR_RNDD);
    mpfr_set_si(hi.raw(), v, MPFR_RNDU);
    return Interval(std::move(lo), std::move(hi));
}

Interval Interval::exact_integer(const mpz_class& v, mpfr_prec_t prec) {
    Real lo(prec), hi(prec);
    mpfr_set_z(lo.raw(), v.get_mpz_t(), MPFR_RNDD);
    mpfr_set_z(hi.raw(), v.get_mpz_t(), MPFR_RNDU);
    return Interval(std::move(lo), std::move(hi));
}

Interval Interval::from_rational(const mpq_class& v, mpfr_prec_t prec) {
    Real lo(prec), hi(prec);
    mpfr_set_q(lo.raw(), v.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(hi.raw(), v.get_mpq_t(), MPFR_RNDU);
    return Interval(std::move(lo), std::move(hi));
}

Interval Interval::from_dyadic_bounds(const Dyadic& lo, const Dyadic& hi,
                                      mpfr_prec_t prec) {
    Real l(prec), h(prec);
    set_dyadic(l.raw(), lo, MPFR_RNDD);
    set_dyadic(h.raw(), hi, MPFR_RNDU);
    return Interval(std::move(l), std::move(h));
}

Interval Interval::from_endpoints(const Real& lo, const Real& hi) {
    if (cmp(lo, hi) > 0) throw std::invalid_argument("interval endpoints out of order");
    return Interval(lo, hi);
}

Interval operator+(const Interval& a, const Interval& b) {
    const mpfr_prec_t prec = join_prec(a, b);
    Real lo(prec), hi(prec);
    mpfr_add(lo.raw(), a.lo().raw(), b.lo().raw(), MPFR_RNDD);
    mpfr_add(hi.raw(), a.hi().raw(), b.hi().raw(), MPFR_RNDU);
    return Interval::from_endpoints(lo, hi);
}

Interval operator-(const Interval& a, const Interval& b) {
    const mpfr_prec_t prec = join_prec(a, b);
    Real lo(prec), hi(prec);
    mpfr_sub(lo.raw(), a.lo().raw(), b.hi().raw(), MPFR_RNDD);
    mpfr_sub(hi.raw(), a.hi().raw(), b.lo().raw(), MPFR_RNDU);
    return Interval::from_endpoints(lo, hi);
}

Interval operator*(const Interval& a, const Interval& b) {
    const mpfr_prec_t prec = join_prec(a, b);
    // min/max over the four endpoint products, each with directed rounding.
    Real lo(prec), hi(prec), t(prec);
    const mpfr_srcptr as[2] = {a.lo().raw(), a.hi().raw()};
    const mpfr_srcptr bs[2] = {b.lo().raw(), b.hi().raw()};
    bool first = true;
    for (auto x : as) {
        for (auto y : bs) {
            mpfr_mul(t.raw(), x, y, MPFR_RNDD);
            if (first || mpfr_cmp(t.raw(), lo.raw()) < 0) mpfr_set(lo.raw(), t.raw(), MPFR_RNDD);
            mpfr_mul(t.raw(), x, y, MPFR_RNDU);
            if (first || mpfr_cmp(t.raw(), hi.raw()) > 0) mpfr_set(hi.raw(), t.raw(), MPFR_RNDU);
            first = false;
        }
    }
    return Interval::from_endpoints(lo, hi);
}

Interval operator/(const Interval& a, const Interval& b) {
    if (b.contains_zero())
        throw PrecisionRefinementNeeded("division by an interval enclosing zero");
    const mpfr_prec_t prec = join_prec(a, b);
    Real lo(prec), hi(prec), t(prec);
    const mpfr_srcptr as[2] = {a.lo().raw(), a.hi().raw()};
    const mpfr_srcptr bs[2] = {b.lo().raw(), b.hi().raw()};
    bool first = true;
    for (auto x : as) {
        for (auto y : bs) {
            mpfr_div(t.raw(), x, y, MPFR_RNDD);
            if (first || mpfr_cmp(t.raw(), lo.raw()) < 0) mpfr_set(lo.raw(), t.raw(), MPFR_RNDD);
            mpfr_div(t.raw(), x, y, MPFR_RNDU);
            if (first || mpfr_cmp(t.raw(), hi.raw()) > 0) mpfr_set(hi.raw(), t.raw(), MPFR_RNDU);
            first = false;
        }
    }
    return Interval::from_endpoints(lo, hi);
}

Interval Interval::negated() const {
    return Interval(hi_.negated(), lo_.negated());
}

Interval Interval::abs_value() const {
    if (lo_.sgn() >= 0) return *this;
    if (hi_.sgn() <= 0) return negated();
    // straddles zero: [0, max(-lo, hi)]
    Real zero(precision());
    Real nlo = lo_.negated();
    const Real& top = cmp(nlo, hi_) >= 0 ? nlo : hi_;
    return Interval(zero, top);
}

Interval Interval::pow_int(long e) const {
    const mpfr_prec_t prec = precision();
    if (e == 0) return exact_long(1, prec);
    if (e < 0) {
        Interval p = pow_int(-e);
        if (p.contains_zero())
            throw PrecisionRefinementNeeded("reciprocal of an interval enclosing zero");
        // 1/x is decreasing on either sign-definite side.
        Real lo(prec), hi(prec);
        mpfr_si_div(lo.raw(), 1, p.hi_.raw(), MPFR_RNDD);
        mpfr_si_div(hi.raw(), 1, p.lo_.raw(), MPFR_RNDU);
        return from_endpoints(lo, hi);
    }
    Real lo(prec), hi(prec);
    if (lo_.sgn() >= 0) {
        mpfr_pow_si(lo.raw(), lo_.raw(), e, MPFR_RNDD);
        mpfr_pow_si(hi.raw(), hi_.raw(), e, MPFR_RNDU);
    } else if (hi_.sgn() <= 0) {
        if (e % 2 == 0) {
            mpfr_pow_si(lo.raw(), hi_.raw(), e, MPFR_RNDD);
            mpfr_pow_si(hi.raw(), lo_.raw(), e, MPFR_RNDU);
        } else {
            mpfr_pow_si(lo.raw(), lo_.raw(), e, MPFR_RNDD);
            mpfr_pow_si(hi.raw(), hi_.raw(), e, MPFR_RNDU);
        }
    } else {
        if (e % 2 == 0) {
            mpfr_set_zero(lo.raw(), 1);
            Real t(prec);
            mpfr_pow_si(t.raw(), lo_.raw(), e, MPFR_RNDU);
            mpfr_pow_si(hi.raw(), hi_.raw(), e, MPFR_RNDU);
            if (cmp(t, hi) > 0) hi = t;
        } else {
            mpfr_pow_si(lo.raw(), lo_.raw(), e, MPFR_RNDD);
            mpfr_pow_si(hi.raw(), hi_.raw(), e, MPFR_RNDU);
        }
    }
    return from_endpoints(lo, hi);
}

Interval Interval::log() const {
    if (lo_.sgn() <= 0) throw std::domain_error("log of an interval touching (-inf, 0]");
    const mpfr_prec_t prec = precision();
    Real lo(prec), hi(prec);
    mpfr_log(lo.raw(), lo_.raw(), MPFR_RNDD);
    mpfr_log(hi.raw(), hi_.raw(), MPFR_RNDU);
    return from_endpoints(lo, hi);
}

Real Interval::mid() const {
    Real m(precision());
    mpfr_add(m.raw(), lo_.raw(), hi_.raw(), MPFR_RNDN);
    mpfr_div_2ui(m.raw(), m.raw(), 1, MPFR_RNDN);
    return m;
}

Real Interval::radius() const {
    Real r(precision());
    mpfr_sub(r.raw(), hi_.raw(), lo_.raw(), MPFR_RNDU);
    mpfr_div_2ui(r.raw(), r.raw(), 1, MPFR_RNDU);
    return r;
}

Real Interval::width() const {
    Real w(precision());
    mpfr_sub(w.raw(), hi_.raw(), lo_.raw(), MPFR_RNDU);
    return w;
}

double Interval::log2_width() const {
    Real w = width();
    Real l(64);
    mpfr_log2(l.raw(), w.raw(), MPFR_RNDU);
    return l.to_double();
}

bool Interval::contains(const mpz_class& v) const {
    return mpfr_cmp_z(lo_.raw(), v.get_mpz_t()) <= 0 &&
           mpfr_cmp_z(hi_.raw(), v.get_mpz_t()) >= 0;
}

bool Interval::contains(const mpq_class& v) const {
    return mpfr_cmp_q(lo_.raw(), v.get_mpq_t()) <= 0 &&
           mpfr_cmp_q(hi_.raw(), v.get_mpq_t()) >= 0;
}

mpz_class Interval::ceil_lo() const {
    mpz_class z;
    mpfr_get_z(z.get_mpz_t(), lo_.raw(), MPFR_RNDU);
    return z;
}

mpz_class Interval::floor_hi() const {
    mpz_class z;
    mpfr_get_z(z.get_mpz_t(), hi_.raw(), MPFR_RNDD);
    return z;
}

Cert cert_le(const Interval& a, const Interval& b) {
    if (cmp(a.hi(), b.lo()) <= 0) return Cert::True;
    if (cmp(a.lo(), b.hi()) > 0) return Cert::False;
    return Cert::Indeterminate;
}

Cert cert_lt(const Interval& a, const Interval& b) {
    if (cmp(a.hi(), b.lo()) < 0) return Cert::True;
    if (cmp(a.lo(), b.hi()) >= 0) return Cert::False;
    return Cert::Indeterminate;
}

bool intersects(const Interval& a, const Interval& b) {
    return cmp(a.lo(), b.hi()) <= 0 && cmp(b.lo(), a.hi()) <= 0;
}

}  // namespace gfib
