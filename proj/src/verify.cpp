#include "gfib/verify.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "gfib/closedform.hpp"
#include "gfib/combinatorics.hpp"
#include "gfib/dyadic.hpp"
#include "gfib/exact.hpp"
#include "gfib/interval.hpp"
#include "gfib/renewal.hpp"
#include "gfib/roots.hpp"

namespace gfib {

namespace {

CheckResult make(std::string suite, std::string name, bool pass, std::string detail) {
    return CheckResult{std::move(suite), std::move(name), pass, std::move(detail)};
}

std::string at(int d) { return "d=" + std::to_string(d); }
std::string at(int d, long long n) {
    return "d=" + std::to_string(d) + " n=" + std::to_string(n);
}

// Exact rational sign of q + q^2 + ... + q^d - 1, independent of the dyadic
// machinery inside solve_q.
int residual_sign_mpq(int d, const mpq_class& x) {
    mpq_class sum = 0;
    mpq_class pw = 1;
    for (int i = 1; i <= d; ++i) {
        pw *= x;
        sum += pw;
    }
    sum -= 1;
    return static_cast<int>(cmp(sum, 0) > 0) - static_cast<int>(cmp(sum, 0) < 0);
}

// ---------------------------------------------------------------------------
// roots

CheckResult check_root_enclosures() {
    const Dyadic half(mpz_class(1), 1);
    const Dyadic one(mpz_class(1), 0);
    for (int d = 2; d <= 16; ++d) {
        const RootEnclosure enc = solve_q(Order(d), 128);
        if (!(half < enc.lo))
            return make("roots", "enclosure-invariants", false, at(d) + ": q_lo <= 1/2");
        if (!(enc.hi < one))
            return make("roots", "enclosure-invariants", false, at(d) + ": q_hi >= 1");
        const Dyadic width = sub(enc.hi, enc.lo);
        if (!(width <= Dyadic(mpz_class(1), enc.precision_bits)))
            return make("roots", "enclosure-invariants", false,
                        at(d) + ": bracket wider than 2^-" + std::to_string(enc.precision_bits));
        if (residual_sign_mpq(d, enc.lo.to_mpq()) > 0)
            return make("roots", "enclosure-invariants", false, at(d) + ": f(q_lo) > 0");
        if (residual_sign_mpq(d, enc.hi.to_mpq()) < 0)
            return make("roots", "enclosure-invariants", false, at(d) + ": f(q_hi) < 0");
    }
    return make("roots", "enclosure-invariants", true,
                "d in 2..16 at 128 bits: bracket in (1/2,1), width <= 2^-128, exact sign checks");
}

CheckResult check_root_monotone() {
    for (int d = 2; d <= 15; ++d) {
        const RootEnclosure a = solve_q(Order(d), 128);
        const RootEnclosure b = solve_q(Order(d + 1), 128);
        if (!(b.hi < a.lo))
            return make("roots", "monotone-in-d", false,
                        at(d) + ": q_" + std::to_string(d + 1) + " not strictly below q_" +
                            std::to_string(d));
    }
    return make("roots", "monotone-in-d", true, "q_{d+1} enclosure strictly below q_d, d in 2..15");
}

CheckResult check_pmf_normalization() {
    for (int d = 2; d <= 16; ++d) {
        const RootEnclosure enc = solve_q(Order(d), 128);
        const Interval q = enc.to_interval();
        Interval sum = Interval::exact_long(0, q.precision());
        Interval qi = Interval::exact_long(1, q.precision());
        for (int i = 1; i <= d; ++i) {
            qi = qi * q;
            sum = sum + qi;
        }
        if (!sum.contains(mpq_class(1)))
            return make("roots", "pmf-normalization", false,
                        at(d) + ": sum of q^i does not enclose 1");
    }
    return make("roots", "pmf-normalization", true, "sum_{i=1..d} q^i encloses 1, d in 2..16");
}

CheckResult check_corollary_support() {
    for (int d = 2; d <= 16; ++d) {
        const RootEnclosure enc = solve_q(Order(d), 128);
        const Interval ratio = mean_lifetime(enc) / enc.to_interval();
        if (cert_lt(Interval::exact_long(2, ratio.precision()), ratio) != Cert::True)
            return make("roots", "corollary-support", false,
                        at(d) + ": E[X1]/q not certified > 2");
    }
    return make("roots", "corollary-support", true, "E[X1]/q certified > 2, d in 2..16");
}

CheckResult check_constant_agreement() {
    for (int d = 2; d <= 16; ++d) {
        const RootEnclosure enc = solve_q(Order(d), 128);
        const Interval a = blackwell_constant(enc, BlackwellMethod::ReciprocalMean);
        const Interval b = blackwell_constant(enc, BlackwellMethod::ClosedForm);
        if (!intersects(a, b))
            return make("roots", "two-formula-agreement", false,
                        at(d) + ": reciprocal-mean and closed-form intervals disjoint");
    }
    return make("roots", "two-formula-agreement", true,
                "both c_d formulas yield intersecting intervals, d in 2..16");
}

// ---------------------------------------------------------------------------
// exact

CheckResult check_cross_method() {
    for (int d = 2; d <= 8; ++d) {
        const FibSequence seq = fib_sequence(Order(d), 512);
        for (long long n = 0; n <= 512; ++n) {
            if (fib_at(Order(d), n) != seq.values[static_cast<std::size_t>(n)])
                return make("exact", "cross-method", false,
                            at(d, n) + ": fib_at and fib_sequence disagree");
        }
    }
    return make("exact", "cross-method", true,
                "fib_at(d,n) = fib_sequence(d,512).values[n], d in 2..8, n in 0..512");
}

CheckResult check_recursion_closure() {
    for (int d = 2; d <= 8; ++d) {
        const FibSequence seq = fib_sequence(Order(d), 512);
        for (long long n = 2; n <= 512; ++n) {
            mpz_class sum = 0;
            for (int i = 1; i <= d; ++i)
                if (n - i >= 0) sum += seq.values[static_cast<std::size_t>(n - i)];
            if (seq.values[static_cast<std::size_t>(n)] != sum)
                return make("exact", "recursion-closure", false,
                            at(d, n) + ": recursion residual nonzero");
        }
    }
    return make("exact", "recursion-closure", true,
                "F_n = sum of previous d terms (zero-extended), d in 2..8, n in 2..512");
}

CheckResult check_monotone_growth() {
    for (int d = 2; d <= 8; ++d) {
        const FibSequence seq = fib_sequence(Order(d), 512);
        for (long long n = 1; n < 512; ++n) {
            const auto& cur = seq.values[static_cast<std::size_t>(n)];
            const auto& nxt = seq.values[static_cast<std::size_t>(n + 1)];
            if (nxt < cur)
                return make("exact", "monotone-growth", false, at(d, n) + ": F_{n+1} < F_n");
            if (n >= 2 && nxt == cur)
                return make("exact", "monotone-growth", false,
                            at(d, n) + ": growth not strict for n >= 2");
        }
    }
    return make("exact", "monotone-growth", true,
                "F_{n+1} >= F_n for n >= 1, strict for n >= 2, d in 2..8");
}

// ---------------------------------------------------------------------------
// combinatorics

CheckResult check_lemma1_desk() {
    for (int d = 2; d <= 5; ++d) {
        for (long long n = 0; n <= 20; ++n) {
            const CompositionSet set = enumerate_compositions(Order(d), n);
            const mpz_class counted = count_compositions(Order(d), n);
            const mpz_class fib = fib_at(Order(d), n + 1);
            if (mpz_class(static_cast<unsigned long>(set.size())) != counted || counted != fib)
                return make("combinatorics", "lemma1-desk", false,
                            at(d, n) + ": |enumeration|, count and F_{n+1} disagree");
        }
    }
    return make("combinatorics", "lemma1-desk", true,
                "|compositions(n)| = count = F_{n+1}, d in 2..5, n in 0..20");
}

CheckResult check_shape_independence() {
    for (int d = 2; d <= 4; ++d) {
        const RootEnclosure enc = solve_q(Order(d), 128);
        for (long long n = 5; n <= 7; ++n) {
            const CompositionSet set = enumerate_compositions(Order(d), n);
            const Interval ref =
                composition_log_probability(Order(d), set.compositions.front(), enc);
            for (const auto& comp : set.compositions) {
                const Interval lp = composition_log_probability(Order(d), comp, enc);
                if (!(lp.lo() == ref.lo()) || !(lp.hi() == ref.hi()))
                    return make("combinatorics", "shape-independence", false,
                                at(d, n) + ": log-probabilities differ across shapes");
            }
        }
    }
    return make("combinatorics", "shape-independence", true,
                "all compositions of n share one log-probability interval, d in 2..4, n in 5..7");
}

CheckResult check_mass_foundation() {
    for (int d = 2; d <= 4; ++d) {
        const RootEnclosure enc = solve_q(Order(d), 128);
        const LifetimeDistribution dist = build_distribution(enc);
        const RenewalMass mass = renewal_mass_dp(dist, 12);
        const Interval q = enc.to_interval();
        Interval qn = Interval::exact_long(1, q.precision());
        for (long long n = 0; n <= 12; ++n) {
            const Interval total =
                Interval::exact_integer(count_compositions(Order(d), n), q.precision()) * qn;
            if (!intersects(total, mass.values[static_cast<std::size_t>(n)]))
                return make("combinatorics", "mass-foundation", false,
                            at(d, n) + ": |compositions| * q^n misses the DP mass");
            qn = qn * q;
        }
    }
    return make("combinatorics", "mass-foundation", true,
                "count * q^n intersects DP mass u_n, d in 2..4, n in 0..12");
}

// ---------------------------------------------------------------------------
// closedform

CheckResult check_oracle_equivalence() {
    for (int d = 2; d <= 8; ++d) {
        for (long long n = 1; n <= 1000; ++n) {
            const ClosedFormValue v = fib_closed(Order(d), n);
            if (!v.certified || v.rounded != fib_at(Order(d), n))
                return make("closedform", "oracle-equivalence", false,
                            at(d, n) + ": rounded closed form != exact value");
        }
    }
    return make("closedform", "oracle-equivalence", true,
                "fib_closed(d,n).rounded = fib_at(d,n), d in 2..8, n in 1..1000");
}

CheckResult check_bound_envelope() {
    const mpq_class half(1, 2);
    for (int d = 2; d <= 8; ++d) {
        for (long long n = 1; n <= 200; ++n) {
            // Resolving x_n = F_n - c q^{-(n-1)} fights cancellation: F_n is
            // q^{-n}-large while |x_n| is ((1-q)/q)^n-small, so certifying the
            // envelope needs roughly n log2(1/(1-q)) bits. Since 1 - q >= q^2
            // for every d >= 2 (equality at d = 2), twice the magnitude budget
            // always covers it.
            const long bits = std::max(256L, 2 * required_precision(Order(d), n));
            const ErrorRecord rec = error_term(Order(d), n, bits);
            const Interval mag = rec.x_n.abs_value();
            if (cert_le(mag, rec.bound) != Cert::True)
                return make("closedform", "bound-envelope", false,
                            at(d, n) + ": |x_n| exceeds the geometric bound");
            if (cert_lt(mag, Interval::from_rational(half, mag.precision())) != Cert::True)
                return make("closedform", "bound-envelope", false,
                            at(d, n) + ": |x_n| not certified below 1/2");
        }
    }
    return make("closedform", "bound-envelope", true,
                "certified |x_n| <= bound and |x_n| < 1/2, d in 2..8, n in 1..200");
}

CheckResult check_half_unit_negative() {
    const mpq_class half(1, 2);
    for (int d = 2; d <= 8; ++d) {
        for (long long n = -10; n <= 0; ++n) {
            const ErrorRecord rec = error_term(Order(d), n, 256);
            const Interval mag = rec.x_n.abs_value();
            if (cert_lt(mag, Interval::from_rational(half, mag.precision())) != Cert::True)
                return make("closedform", "half-unit-negative", false,
                            at(d, n) + ": |x_n| not certified below 1/2");
        }
    }
    return make("closedform", "half-unit-negative", true,
                "certified |x_n| < 1/2 for n in -10..0, d in 2..8");
}

CheckResult check_geometric_decay() {
    for (int d = 2; d <= 8; ++d) {
        Interval prev = theorem_bound(Order(d), 1, 128);
        for (long long n = 2; n <= 200; ++n) {
            const Interval cur = theorem_bound(Order(d), n, 128);
            if (cert_lt(cur, prev) != Cert::True)
                return make("closedform", "geometric-decay", false,
                            at(d, n) + ": bound not certified strictly decreasing");
            prev = cur;
        }
    }
    return make("closedform", "geometric-decay", true,
                "theorem bound strictly decreasing in n, d in 2..8, n in 1..200");
}

CheckResult check_required_precision() {
    for (int d = 2; d <= 8; ++d) {
        if (required_precision(Order(d), 1) < 33)
            return make("closedform", "required-precision", false,
                        at(d) + ": budget at n=1 below 33 bits");
        long prev = required_precision(Order(d), 1);
        for (long long n = 2; n <= 100; ++n) {
            const long cur = required_precision(Order(d), n);
            if (cur < prev)
                return make("closedform", "required-precision", false,
                            at(d, n) + ": budget not monotone in n");
            prev = cur;
        }
    }
    return make("closedform", "required-precision", true,
                "budget >= 33 bits and monotone in n, d in 2..8, n in 1..100");
}

// ---------------------------------------------------------------------------
// renewal

CheckResult check_proposition_identity() {
    for (int d = 2; d <= 6; ++d) {
        const RootEnclosure enc = solve_q(Order(d), 128);
        const LifetimeDistribution dist = build_distribution(enc);
        const RenewalMass mass = renewal_mass_dp(dist, 200);
        const FibSequence seq = fib_sequence(Order(d), 201);
        const Interval q = enc.to_interval();
        Interval qk = Interval::exact_long(1, q.precision());
        for (long long k = 0; k <= 200; ++k) {
            const Interval rhs =
                qk * Interval::exact_integer(seq.values[static_cast<std::size_t>(k + 1)],
                                             q.precision());
            if (!intersects(mass.values[static_cast<std::size_t>(k)], rhs))
                return make("renewal", "proposition-identity", false,
                            at(d, k) + ": u_k and q^k F_{k+1} enclosures disjoint");
            qk = qk * q;
        }
    }
    return make("renewal", "proposition-identity", true,
                "u_k intersects q^k F_{k+1}, d in 2..6, k in 0..200 at 128 bits");
}

CheckResult check_blackwell_rate() {
    for (int d = 2; d <= 6; ++d) {
        const LifetimeDistribution dist = build_distribution(solve_q(Order(d), 512));
        const RenewalMass mass = renewal_mass_dp(dist, 199);
        const Interval c = blackwell_constant(dist.enclosure, BlackwellMethod::ReciprocalMean);
        for (long long n = 1; n <= 200; ++n) {
            if (blackwell_rate_check(dist, mass, c, n) != Cert::True)
                return make("renewal", "blackwell-rate", false,
                            at(d, n) + ": |u_{n-1} - c| <= (1-q)^n not certified");
        }
    }
    return make("renewal", "blackwell-rate", true,
                "|u_{n-1} - c_d| <= (1-q)^n certified, d in 2..6, n in 1..200");
}

CheckResult check_nbu() {
    for (int d = 2; d <= 8; ++d) {
        const LifetimeDistribution dist = build_distribution(solve_q(Order(d), 128));
        for (long long i = 0; i < d; ++i) {
            for (long long j = 0; j <= d; ++j) {
                if (nbu_check(dist, i, j) != Cert::True)
                    return make("renewal", "nbu", false,
                                "d=" + std::to_string(d) + " i=" + std::to_string(i) +
                                    " j=" + std::to_string(j) + ": inequality not certified");
            }
        }
    }
    return make("renewal", "nbu", true,
                "P(X>i+j) <= P(X>i)P(X>j) certified for 0 <= i < d, 0 <= j <= d, d in 2..8");
}

CheckResult check_mc_soundness() {
    const LifetimeDistribution dist = build_distribution(solve_q(Order(3), 128));
    const RenewalMass mass = renewal_mass_dp(dist, 10);
    const double exact = mass.values[10].mid().to_double();
    int covered = 0;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const SimulationReport rep = simulate_first_passage(dist, 10, 100000, seed);
        if (rep.ci_lo <= exact && exact <= rep.ci_hi) ++covered;
    }
    if (covered < 17)
        return make("renewal", "mc-soundness", false,
                    "only " + std::to_string(covered) + "/20 confidence intervals covered u_10");
    return make("renewal", "mc-soundness", true,
                std::to_string(covered) + "/20 confidence intervals covered u_10 (d=3, 1e5 reps)");
}

CheckResult check_mc_determinism() {
    const LifetimeDistribution dist = build_distribution(solve_q(Order(3), 128));
    const SimulationReport a = simulate_first_passage(dist, 10, 10000, 42);
    const SimulationReport b = simulate_first_passage(dist, 10, 10000, 42);
    if (a.hits != b.hits || a.estimate != b.estimate || a.std_error != b.std_error ||
        a.ci_lo != b.ci_lo || a.ci_hi != b.ci_hi)
        return make("renewal", "mc-determinism", false,
                    "identical (seed, replications) produced different reports");
    return make("renewal", "mc-determinism", true,
                "identical (seed, replications) reproduce the report bit for bit");
}

CheckResult check_distribution_invariants() {
    const mpq_class one_q(1);
    for (int d = 2; d <= 16; ++d) {
        const LifetimeDistribution dist = build_distribution(solve_q(Order(d), 128));
        const mpfr_prec_t prec = dist.pmf.front().precision();
        const Interval zero = Interval::exact_long(0, prec);
        const Interval one = Interval::exact_long(1, prec);
        for (int i = 0; i < d; ++i) {
            if (cert_lt(zero, dist.pmf[static_cast<std::size_t>(i)]) != Cert::True ||
                cert_lt(dist.pmf[static_cast<std::size_t>(i)], one) != Cert::True)
                return make("renewal", "distribution-invariants", false,
                            at(d) + ": p_" + std::to_string(i + 1) + " not certified in (0,1)");
        }
        if (!dist.cdf.back().contains(one_q))
            return make("renewal", "distribution-invariants", false,
                        at(d) + ": cdf does not end at 1");
        for (int i = 0; i + 1 < d; ++i) {
            if (cert_le(dist.cdf[static_cast<std::size_t>(i)],
                        dist.cdf[static_cast<std::size_t>(i) + 1]) != Cert::True)
                return make("renewal", "distribution-invariants", false,
                            at(d) + ": cdf not certified nondecreasing at i=" +
                                std::to_string(i + 1));
        }
        const RenewalMass mass = renewal_mass_dp(dist, 50);
        if (!mass.values.front().is_point() || !mass.values.front().contains(one_q))
            return make("renewal", "distribution-invariants", false,
                        at(d) + ": u_0 is not exactly 1");
        for (long long k = 0; k <= 50; ++k) {
            const Interval& u = mass.values[static_cast<std::size_t>(k)];
            if (!(u.lo().sgn() > 0) || !(u.hi() <= one.hi()))
                return make("renewal", "distribution-invariants", false,
                            at(d, k) + ": u_k outside (0, 1]");
        }
    }
    return make("renewal", "distribution-invariants", true,
                "pmf in (0,1), cdf normalized and monotone, u_k in (0,1], d in 2..16");
}

void append(VerifyReport& into, VerifyReport part) {
    for (auto& r : part.results) into.results.push_back(std::move(r));
}

}  // namespace

VerifyReport verify_roots() {
    VerifyReport rep;
    rep.results.push_back(check_root_enclosures());
    rep.results.push_back(check_root_monotone());
    rep.results.push_back(check_pmf_normalization());
    rep.results.push_back(check_corollary_support());
    rep.results.push_back(check_constant_agreement());
    return rep;
}

VerifyReport verify_exact() {
    VerifyReport rep;
    rep.results.push_back(check_cross_method());
    rep.results.push_back(check_recursion_closure());
    rep.results.push_back(check_monotone_growth());
    return rep;
}

VerifyReport verify_combinatorics() {
    VerifyReport rep;
    rep.results.push_back(check_lemma1_desk());
    rep.results.push_back(check_shape_independence());
    rep.results.push_back(check_mass_foundation());
    return rep;
}

VerifyReport verify_closedform() {
    VerifyReport rep;
    rep.results.push_back(check_oracle_equivalence());
    rep.results.push_back(check_bound_envelope());
    rep.results.push_back(check_half_unit_negative());
    rep.results.push_back(check_geometric_decay());
    rep.results.push_back(check_required_precision());
    return rep;
}

VerifyReport verify_renewal() {
    VerifyReport rep;
    rep.results.push_back(check_proposition_identity());
    rep.results.push_back(check_blackwell_rate());
    rep.results.push_back(check_nbu());
    rep.results.push_back(check_mc_soundness());
    rep.results.push_back(check_mc_determinism());
    rep.results.push_back(check_distribution_invariants());
    return rep;
}

VerifyReport verify_all() {
    VerifyReport rep;
    append(rep, verify_roots());
    append(rep, verify_exact());
    append(rep, verify_combinatorics());
    append(rep, verify_closedform());
    append(rep, verify_renewal());
    return rep;
}

}  // namespace gfib
