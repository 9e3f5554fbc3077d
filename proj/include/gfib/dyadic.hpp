#pragma once

#include <gmpxx.h>

#include <string>

namespace gfib {

/// Exact dyadic rational mantissa / 2^exponent. Root-enclosure endpoints
/// stay in this form so that polynomial sign tests remain exact integer
/// arithmetic, never floating point.
struct Dyadic {
    mpz_class mantissa;
    long exponent = 0;  // value = mantissa / 2^exponent, exponent >= 0

    Dyadic() = default;
    Dyadic(mpz_class m, long e) : mantissa(std::move(m)), exponent(e) {}

    static Dyadic from_long(long v) { return Dyadic(mpz_class(v), 0); }

    mpq_class to_mpq() const;
    double to_double() const { return to_mpq().get_d(); }

    /// Exact decimal expansion (a dyadic always has one).
    std::string to_decimal_string() const;
};

/// Exact three-way comparison of values.
int cmp(const Dyadic& a, const Dyadic& b);

inline bool operator<(const Dyadic& a, const Dyadic& b) { return cmp(a, b) < 0; }
inline bool operator<=(const Dyadic& a, const Dyadic& b) { return cmp(a, b) <= 0; }
inline bool operator==(const Dyadic& a, const Dyadic& b) { return cmp(a, b) == 0; }

/// Exact difference b - a as a dyadic.
Dyadic sub(const Dyadic& b, const Dyadic& a);

}  // namespace gfib
