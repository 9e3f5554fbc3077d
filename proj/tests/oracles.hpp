#pragma once

// Independent reference implementations used to pin expected values in the
// test suite. These deliberately avoid the library's own machinery: the root
// bracket comes from plain bisection over exact rationals, and the sequence
// values come from the textbook d-term recursion with no sliding window.

#include <gmpxx.h>

#include <utility>
#include <vector>

namespace oracle {

// f(x) = x + x^2 + ... + x^d - 1, evaluated exactly over the rationals.
inline mpq_class poly(int d, const mpq_class& x) {
    mpq_class sum = 0;
    mpq_class power = 1;
    for (int i = 1; i <= d; ++i) {
        power *= x;
        sum += power;
    }
    return sum - 1;
}

// Bisection on [0, 1] with exact rational midpoints. Returns a bracket
// [lo, hi] of width 2^-steps with poly(lo) < 0 < poly(hi).
inline std::pair<mpq_class, mpq_class> root_bracket(int d, int steps) {
    mpq_class lo = 0;
    mpq_class hi = 1;
    for (int s = 0; s < steps; ++s) {
        mpq_class mid = (lo + hi) / 2;
        if (poly(d, mid) < 0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return {lo, hi};
}

// Direct d-term recursion: v[n] = v[n-1] + ... + v[n-d], with v[n] = 0 for
// n <= 0 and v[1] = 1. Returns v[0..n_max].
inline std::vector<mpz_class> fib_values(int d, int n_max) {
    std::vector<mpz_class> v(static_cast<size_t>(n_max) + 1);
    if (n_max >= 1) {
        v[1] = 1;
    }
    for (int n = 2; n <= n_max; ++n) {
        mpz_class sum = 0;
        for (int i = 1; i <= d; ++i) {
            if (n - i >= 0) {
                sum += v[static_cast<size_t>(n - i)];
            }
        }
        v[static_cast<size_t>(n)] = sum;
    }
    return v;
}

}  // namespace oracle
