#pragma once

#include <cstdint>
#include <vector>

#include "gfib/interval.hpp"
#include "gfib/order.hpp"
#include "gfib/roots.hpp"

namespace gfib {

// Lattice lifetime law P(X = i) = q^i on {1, ..., d} (which sums to 1 by the
// defining equation of q), with certified pmf, cdf and tail enclosures.
struct LifetimeDistribution {
    Order d;
    RootEnclosure enclosure;
    std::vector<Interval> pmf;  // pmf[i-1] encloses q^i, i = 1..d
    std::vector<Interval> cdf;  // cdf[i-1] encloses q + ... + q^i

    // P(X > i): exact 1 for i <= 0, exact 0 for i >= d, 1 - cdf otherwise.
    Interval tail(long long i) const;
};

// Renewal mass u_k = P(S_{tau_k} = k): the probability that the lifetime walk
// ever occupies k exactly. u_0 = 1 by convention (S_0 = 0).
struct RenewalMass {
    Order d;
    std::vector<Interval> values;  // values[k] encloses u_k, k = 0..n_max
};

// Monte Carlo estimate of u_n. Fully reproducible: see simulate_first_passage.
struct SimulationReport {
    Order d;
    long long n = 0;
    long long replications = 0;
    std::uint64_t seed = 0;
    long long hits = 0;
    double estimate = 0.0;
    double std_error = 0.0;
    double ci_lo = 0.0;  // 95% confidence interval, estimate +- 1.96 se
    double ci_hi = 0.0;
};

LifetimeDistribution build_distribution(const RootEnclosure& enclosure);

// Renewal equation u_k = sum_{i=1..min(d,k)} p_i u_{k-i}, recomputed from
// u_0 each call. n_max beyond 10^6 is rejected (bounded memory).
RenewalMass renewal_mass_dp(const LifetimeDistribution& dist, long long n_max);

// Estimates P(S_{tau_n} = n) over `replications` independent walks.
//
// Reproducibility contract (fixed; never silently changed):
//   - replications are partitioned into blocks of 65536;
//   - block b (0-based) uses its own std::mt19937_64 seeded with
//     splitmix64(seed + (b+1) * 0x9E3779B97F4A7C15);
//   - uniforms are (x >> 11) * 2^-53 from raw 64-bit draws;
//   - lifetimes are sampled by inverse CDF over the midpoint pmf,
//     renormalized to sum to 1 in double precision.
// Blocks may run in any order; hits are summed, so the report depends only
// on (d, n, replications, seed).
SimulationReport simulate_first_passage(const LifetimeDistribution& dist, long long n,
                                        long long replications, std::uint64_t seed);

// Certified check of the NBU inequality P(X > i+j) <= P(X > i) P(X > j)
// for 0 <= i < d, j >= 0. The i = 0 and j = 0 cases hold with equality by
// the probability axioms and are reported True without interval comparison
// (an interval test can never certify an exact equality). Indeterminate
// results are retried once at doubled precision before being reported.
// Throws std::invalid_argument when i >= d (conditioning on a null event)
// or when i or j is negative.
Cert nbu_check(const LifetimeDistribution& dist, long long i, long long j);

// Certified check of the geometric convergence rate |u_{n-1} - c_d| <= (1-q)^n.
// Requires 1 <= n <= mass.values size. Indeterminate results trigger one
// internal rebuild of every operand at doubled precision before reporting.
Cert blackwell_rate_check(const LifetimeDistribution& dist, const RenewalMass& mass,
                          const Interval& c, long long n);

}  // namespace gfib
