#include "gfib/roots.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

#include "gfib/errors.hpp"

namespace gfib {

namespace {

// Exact sign of f(a / 2^k) for f(q) = q + q^2 + ... + q^d - 1.
// With G_j = sum_{i=1..j} a^i 2^{k(j-i)} (so G_d = f-part scaled by 2^{kd}),
// the recursion G_j = a * (2^{k(j-1)} + G_{j-1}) keeps everything integer.
int poly_sign(int d, const mpz_class& a, long k) {
    mpz_class g = a;        // G_1
    mpz_class p = 1;
    p <<= static_cast<unsigned long>(k);  // 2^{k(j-1)} for j = 2
    for (int j = 2; j <= d; ++j) {
        g = a * (p + g);
        if (j < d) p <<= static_cast<unsigned long>(k);
    }
    mpz_class rhs = 1;
    rhs <<= static_cast<unsigned long>(k) * static_cast<unsigned long>(d);
    return cmp(g, rhs);
}

mpfr_prec_t working_prec(const RootEnclosure& enc) {
    return static_cast<mpfr_prec_t>(enc.precision_bits + kPrecisionGuardBits);
}

}  // namespace

Interval RootEnclosure::to_interval(mpfr_prec_t prec) const {
    return Interval::from_dyadic_bounds(lo, hi, prec);
}

Interval RootEnclosure::to_interval() const { return to_interval(working_prec(*this)); }

namespace {

// solve_q is deterministic in (d, precision_bits), so repeated requests are
// served from a process-wide memo; callers observe identical results either
// way. Guarded for concurrent use.
std::mutex g_enclosure_cache_mutex;
std::map<std::pair<int, long>, RootEnclosure>& enclosure_cache() {
    static std::map<std::pair<int, long>, RootEnclosure> cache;
    return cache;
}

RootEnclosure solve_q_uncached(Order d, long precision_bits) {
    // Bracket [1/2, 1]: f(1/2) = -2^-d < 0 and f(1) = d - 1 > 0.
    mpz_class lo = 1, hi = 2;
    long k = 1;

    auto lo_is_half = [&] {
        mpz_class half = 1;
        half <<= static_cast<unsigned long>(k - 1);
        return lo == half;
    };

    while (k < precision_bits || lo_is_half()) {
        if (k > max_precision_bits())
            throw PrecisionCeilingError("solve_q: bracket (1/2, 1) not separated below ceiling");
        lo <<= 1;
        hi <<= 1;
        ++k;
        mpz_class mid = lo + 1;
        const int s = poly_sign(d.value(), mid, k);
        // q_d is irrational (rational root theorem), so no dyadic midpoint
        // can be a root; a zero sign would mean the sign test itself broke.
        if (s == 0) throw std::logic_error("solve_q: exact zero at a dyadic midpoint");
        if (s < 0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }

    return RootEnclosure{d, Dyadic(lo, k), Dyadic(hi, k), precision_bits};
}

}  // namespace

RootEnclosure solve_q(Order d, long precision_bits) {
    if (precision_bits < 8) throw std::invalid_argument("precision_bits must be >= 8");
    if (precision_bits > max_precision_bits())
        throw PrecisionCeilingError("solve_q: requested " + std::to_string(precision_bits) +
                                    " bits, ceiling is " + std::to_string(max_precision_bits()));

    const auto key = std::make_pair(d.value(), precision_bits);
    {
        std::lock_guard<std::mutex> lock(g_enclosure_cache_mutex);
        auto it = enclosure_cache().find(key);
        if (it != enclosure_cache().end()) return it->second;
    }
    RootEnclosure enc = solve_q_uncached(d, precision_bits);
    {
        std::lock_guard<std::mutex> lock(g_enclosure_cache_mutex);
        enclosure_cache().emplace(key, enc);
    }
    return enc;
}

Interval mean_lifetime(const RootEnclosure& enc) {
    const mpfr_prec_t prec = working_prec(enc);
    const Interval q = enc.to_interval(prec);
    Interval sum = Interval::exact_long(0, prec);
    Interval qi = Interval::exact_long(1, prec);
    for (int i = 1; i <= enc.d.value(); ++i) {
        qi = qi * q;
        sum = sum + Interval::exact_long(i, prec) * qi;
    }
    return sum;
}

Interval blackwell_constant(const RootEnclosure& enc, BlackwellMethod method) {
    const mpfr_prec_t prec = working_prec(enc);
    if (method == BlackwellMethod::ReciprocalMean) {
        return Interval::exact_long(1, prec) / mean_lifetime(enc);
    }
    const int d = enc.d.value();
    const Interval q = enc.to_interval(prec);
    const Interval one = Interval::exact_long(1, prec);
    const Interval num = (q - one).pow_int(2);
    const Interval den = Interval::exact_long(d, prec) * q.pow_int(d + 2) -
                         Interval::exact_long(d + 1, prec) * q.pow_int(d + 1) + q;
    if (den.contains_zero())
        throw PrecisionRefinementNeeded(
            "blackwell_constant(closed_form): denominator encloses zero; refine the root");
    return num / den;
}

Interval characteristic_residual(const RootEnclosure& enc) {
    const mpfr_prec_t prec = working_prec(enc);
    const Interval q = enc.to_interval(prec);
    const Interval one = Interval::exact_long(1, prec);
    const Interval x = one / q;
    // Horner on x^d - x^{d-1} - ... - x - 1.
    Interval r = one;
    for (int i = 0; i < enc.d.value(); ++i) r = r * x - one;
    return r;
}

}  // namespace gfib
