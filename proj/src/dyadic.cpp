#include "gfib/dyadic.hpp"

#include <stdexcept>

namespace gfib {

mpq_class Dyadic::to_mpq() const {
    if (exponent < 0) throw std::logic_error("dyadic exponent must be >= 0");
    mpq_class q(mantissa);
    mpz_class den = 1;
    den <<= static_cast<unsigned long>(exponent);
    q /= mpq_class(den);
    q.canonicalize();
    return q;
}

std::string Dyadic::to_decimal_string() const {
    // m / 2^k = m * 5^k / 10^k: exact digits with the point k from the right.
    if (exponent < 0) throw std::logic_error("dyadic exponent must be >= 0");
    mpz_class scaled = mantissa;
    mpz_class five = 5;
    mpz_class p5;
    mpz_pow_ui(p5.get_mpz_t(), five.get_mpz_t(), static_cast<unsigned long>(exponent));
    scaled *= p5;

    const bool neg = scaled < 0;
    if (neg) scaled = -scaled;
    std::string digits = scaled.get_str();
    const auto k = static_cast<std::size_t>(exponent);
    if (digits.size() <= k) digits.insert(0, k + 1 - digits.size(), '0');
    std::string out;
    if (neg) out.push_back('-');
    out.append(digits, 0, digits.size() - k);
    if (k > 0) {
        out.push_back('.');
        out.append(digits, digits.size() - k, k);
    }
    return out;
}

int cmp(const Dyadic& a, const Dyadic& b) {
    // Scale to the common exponent max(ea, eb) and compare mantissas.
    mpz_class ma = a.mantissa;
    mpz_class mb = b.mantissa;
    if (a.exponent < b.exponent) {
        ma <<= static_cast<unsigned long>(b.exponent - a.exponent);
    } else if (b.exponent < a.exponent) {
        mb <<= static_cast<unsigned long>(a.exponent - b.exponent);
    }
    return ::cmp(ma, mb);
}

Dyadic sub(const Dyadic& b, const Dyadic& a) {
    long e = std::max(a.exponent, b.exponent);
    mpz_class ma = a.mantissa << static_cast<unsigned long>(e - a.exponent);
    mpz_class mb = b.mantissa << static_cast<unsigned long>(e - b.exponent);
    return Dyadic(mb - ma, e);
}

}  // namespace gfib
