#include "gfib/format.hpp"

#include <stdexcept>

namespace gfib {

std::string decimal_fixed(const Real& x, int decimals, bool truncate) {
    if (decimals < 0) throw std::invalid_argument("decimals must be >= 0");
    if (mpfr_nan_p(x.raw()) || mpfr_inf_p(x.raw()))
        throw std::invalid_argument("non-finite value");

    // Decompose exactly: x = m * 2^e.
    mpz_class m;
    mpfr_exp_t e = 0;
    if (!x.is_zero()) e = mpfr_get_z_2exp(m.get_mpz_t(), x.raw());

    const bool neg = m < 0;
    if (neg) m = -m;

    // scaled = floor or round of |x| * 10^decimals, computed exactly.
    mpz_class ten10;
    mpz_ui_pow_ui(ten10.get_mpz_t(), 10, static_cast<unsigned long>(decimals));
    mpz_class num = m * ten10;
    mpz_class scaled;
    if (e >= 0) {
        scaled = num << static_cast<unsigned long>(e);
    } else {
        mpz_class den = 1;
        den <<= static_cast<unsigned long>(-e);
        mpz_class r;
        mpz_tdiv_qr(scaled.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        if (!truncate) {
            // round half away from zero
            if (2 * r >= den) scaled += 1;
        }
    }

    std::string digits = scaled.get_str();
    const auto k = static_cast<std::size_t>(decimals);
    if (digits.size() <= k) digits.insert(0, k + 1 - digits.size(), '0');
    std::string out;
    if (neg && scaled != 0) out.push_back('-');
    out.append(digits, 0, digits.size() - k);
    if (k > 0) {
        out.push_back('.');
        out.append(digits, digits.size() - k, k);
    }
    return out;
}

std::string to_scientific(const Real& x) {
    if (x.is_zero()) return "0";
    mpfr_exp_t exp = 0;
    char* s = mpfr_get_str(nullptr, &exp, 10, 0, x.raw(), MPFR_RNDN);
    if (s == nullptr) throw std::runtime_error("mpfr_get_str failed");
    std::string digits(s);
    mpfr_free_str(s);

    std::string sign;
    if (!digits.empty() && digits[0] == '-') {
        sign = "-";
        digits.erase(0, 1);
    }
    std::string out = sign + digits.substr(0, 1);
    if (digits.size() > 1) out += "." + digits.substr(1);
    out += "e" + std::to_string(static_cast<long>(exp) - 1);
    return out;
}

Real parse_real(const std::string& s, mpfr_prec_t prec) {
    Real r(prec);
    if (mpfr_set_str(r.raw(), s.c_str(), 10, MPFR_RNDN) != 0)
        throw std::invalid_argument("malformed real literal: " + s);
    return r;
}

}  // namespace gfib
