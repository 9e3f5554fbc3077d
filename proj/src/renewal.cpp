#include "gfib/renewal.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "gfib/errors.hpp"

namespace gfib {

namespace {

constexpr long long kBlockSize = 65536;
constexpr std::uint64_t kGoldenGamma = 0x9E3779B97F4A7C15ULL;

std::uint64_t splitmix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

double to_unit(std::uint64_t x) { return static_cast<double>(x >> 11) * 0x1.0p-53; }

}  // namespace

Interval LifetimeDistribution::tail(long long i) const {
    const mpfr_prec_t prec = pmf.front().precision();
    if (i <= 0) return Interval::exact_long(1, prec);
    if (i >= d.value()) return Interval::exact_long(0, prec);
    return Interval::exact_long(1, prec) - cdf[static_cast<std::size_t>(i) - 1];
}

LifetimeDistribution build_distribution(const RootEnclosure& enclosure) {
    const Interval q = enclosure.to_interval();
    LifetimeDistribution dist{enclosure.d, enclosure, {}, {}};
    Interval qi = Interval::exact_long(1, q.precision());
    Interval acc = Interval::exact_long(0, q.precision());
    for (int i = 1; i <= enclosure.d.value(); ++i) {
        qi = qi * q;
        acc = acc + qi;
        dist.pmf.push_back(qi);
        dist.cdf.push_back(acc);
    }
    return dist;
}

RenewalMass renewal_mass_dp(const LifetimeDistribution& dist, long long n_max) {
    if (n_max < 0) throw std::invalid_argument("renewal_mass_dp: n_max must be >= 0");
    if (n_max > 1'000'000)
        throw std::length_error("renewal_mass_dp: n_max beyond 10^6 rejected");
    const mpfr_prec_t prec = dist.pmf.front().precision();
    RenewalMass mass{dist.d, {}};
    mass.values.reserve(static_cast<std::size_t>(n_max) + 1);
    mass.values.push_back(Interval::exact_long(1, prec));
    const int d = dist.d.value();
    for (long long k = 1; k <= n_max; ++k) {
        Interval acc = Interval::exact_long(0, prec);
        for (int i = 1; i <= d && i <= k; ++i)
            acc = acc + dist.pmf[static_cast<std::size_t>(i) - 1] *
                            mass.values[static_cast<std::size_t>(k - i)];
        mass.values.push_back(acc);
    }
    return mass;
}

SimulationReport simulate_first_passage(const LifetimeDistribution& dist, long long n,
                                        long long replications, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("simulate_first_passage: n must be >= 1");
    if (replications < 1)
        throw std::invalid_argument("simulate_first_passage: replications must be >= 1");

    // Midpoint pmf renormalized to sum to 1 in doubles. Sampling error from
    // this quantization (~1e-16) is far below Monte Carlo noise; certified
    // arithmetic is reserved for the DP and the comparisons.
    const int d = dist.d.value();
    std::vector<double> threshold(static_cast<std::size_t>(d));
    double total = 0.0;
    for (int i = 0; i < d; ++i)
        total += dist.pmf[static_cast<std::size_t>(i)].mid().to_double();
    double acc = 0.0;
    for (int i = 0; i < d; ++i) {
        acc += dist.pmf[static_cast<std::size_t>(i)].mid().to_double() / total;
        threshold[static_cast<std::size_t>(i)] = acc;
    }
    threshold[static_cast<std::size_t>(d) - 1] = 1.0;

    long long hits = 0;
    const long long blocks = (replications + kBlockSize - 1) / kBlockSize;
    for (long long b = 0; b < blocks; ++b) {
        std::mt19937_64 rng(
            splitmix64(seed + (static_cast<std::uint64_t>(b) + 1) * kGoldenGamma));
        const long long lo = b * kBlockSize;
        const long long hi = std::min(replications, lo + kBlockSize);
        for (long long r = lo; r < hi; ++r) {
            long long s = 0;
            while (s < n) {
                const double u = to_unit(rng());
                int life = d;
                for (int i = 0; i < d; ++i) {
                    if (u < threshold[static_cast<std::size_t>(i)]) {
                        life = i + 1;
                        break;
                    }
                }
                s += life;
            }
            if (s == n) ++hits;
        }
    }

    const double estimate = static_cast<double>(hits) / static_cast<double>(replications);
    const double std_error =
        std::sqrt(estimate * (1.0 - estimate) / static_cast<double>(replications));
    const double half_width = 1.96 * std_error;
    return SimulationReport{dist.d,   n,         replications,         seed,
                            hits,     estimate,  std_error,            estimate - half_width,
                            estimate + half_width};
}

namespace {

Cert nbu_at(const LifetimeDistribution& dist, long long i, long long j) {
    return cert_le(dist.tail(i + j), dist.tail(i) * dist.tail(j));
}

}  // namespace

Cert nbu_check(const LifetimeDistribution& dist, long long i, long long j) {
    if (i < 0 || j < 0) throw std::invalid_argument("nbu_check: i and j must be >= 0");
    if (i >= dist.d.value())
        throw std::invalid_argument(
            "nbu_check: conditioning event {X > i} has probability 0 for i >= d");
    // i = 0 or j = 0 is an equality of identical probabilities; hold True by
    // the axioms rather than asking interval arithmetic to certify equality.
    if (i == 0 || j == 0) return Cert::True;
    const Cert first = nbu_at(dist, i, j);
    if (first != Cert::Indeterminate) return first;
    const long finer = std::min(dist.enclosure.precision_bits * 2, max_precision_bits());
    if (finer <= dist.enclosure.precision_bits) return first;
    return nbu_at(build_distribution(solve_q(dist.d, finer)), i, j);
}

namespace {

Cert rate_at(const LifetimeDistribution& dist, const Interval& u_prev, const Interval& c,
             long long n) {
    const Interval q = dist.enclosure.to_interval();
    const Interval lhs = (u_prev - c).abs_value();
    const Interval rhs =
        (Interval::exact_long(1, q.precision()) - q).pow_int(static_cast<long>(n));
    return cert_le(lhs, rhs);
}

}  // namespace

Cert blackwell_rate_check(const LifetimeDistribution& dist, const RenewalMass& mass,
                          const Interval& c, long long n) {
    if (n < 1 || static_cast<std::size_t>(n) > mass.values.size())
        throw std::out_of_range("blackwell_rate_check: n out of range for the given mass");
    const Cert first = rate_at(dist, mass.values[static_cast<std::size_t>(n) - 1], c, n);
    if (first != Cert::Indeterminate) return first;
    const long finer = std::min(dist.enclosure.precision_bits * 2, max_precision_bits());
    if (finer <= dist.enclosure.precision_bits) return first;
    const LifetimeDistribution fine = build_distribution(solve_q(dist.d, finer));
    const RenewalMass fine_mass = renewal_mass_dp(fine, n - 1);
    const Interval fine_c = blackwell_constant(fine.enclosure, BlackwellMethod::ReciprocalMean);
    return rate_at(fine, fine_mass.values[static_cast<std::size_t>(n) - 1], fine_c, n);
}

}  // namespace gfib
