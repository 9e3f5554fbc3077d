#pragma once

#include <vector>

#include <gmpxx.h>

#include "gfib/interval.hpp"
#include "gfib/order.hpp"
#include "gfib/roots.hpp"

namespace gfib {

// Compositions of n into ordered parts drawn from {1, ..., d}.
//
// These provide an independent brute-force path to the generalized Fibonacci
// numbers: the number of such compositions of n equals F_{n+1}.
struct CompositionSet {
    Order d;
    long long n;
    std::vector<std::vector<int>> compositions;

    std::size_t size() const { return compositions.size(); }
};

inline constexpr long long kDefaultEnumerationCap = 30;

// Exhaustive, duplicate-free, lexicographically ordered enumeration.
// n = 0 yields exactly the empty composition; n < 0 yields the empty set.
// Throws EnumerationCapError when n exceeds `cap` (explosion guard).
CompositionSet enumerate_compositions(Order d, long long n,
                                      long long cap = kDefaultEnumerationCap);

// Counting via the last-part recursion C(n) = sum_{k=1..d} C(n-k),
// C(0) = 1, C(n<0) = 0, without materializing tuples. Equals
// enumerate_compositions(d, n).size() below the cap and extends beyond it.
mpz_class count_compositions(Order d, long long n);

// Interval containing sum(parts) * log q. All compositions of the same total
// therefore share the same log-probability: exp of it is q^n regardless of
// shape. The empty composition has log-probability exactly 0.
// Throws std::invalid_argument if any part lies outside 1..d.
Interval composition_log_probability(Order d, const std::vector<int>& composition,
                                     const RootEnclosure& enclosure);

}  // namespace gfib
