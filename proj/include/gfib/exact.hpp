#pragma once

#include <gmpxx.h>

#include <vector>

#include "gfib/order.hpp"

namespace gfib {

/// Exact values F_0 .. F_{n_max} for one order d: F_n = 0 for n <= 0,
/// F_1 = 1, F_n = F_{n-1} + ... + F_{n-d} (missing terms read as zero).
struct FibSequence {
    Order d;
    std::vector<mpz_class> values;
};

/// Sliding-window recursion, O(n_max) big-integer additions.
FibSequence fib_sequence(Order d, long long n_max);

/// Single term by companion-matrix binary exponentiation,
/// O(d^3 log n) big-integer multiplications. Returns 0 for n <= 0.
mpz_class fib_at(Order d, long long n);

}  // namespace gfib
