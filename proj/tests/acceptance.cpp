// Acceptance gate: ten end-to-end checks, one line of output each, covering
// the headline guarantees of the library and the command-line tool. Exits
// with the number of failed checks (0 on full success).
//
// Usage: gfib_acceptance <path-to-gfib-cli>

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "gfib/closedform.hpp"
#include "gfib/combinatorics.hpp"
#include "gfib/exact.hpp"
#include "gfib/interval.hpp"
#include "gfib/renewal.hpp"
#include "gfib/roots.hpp"
#include "gfib/verify.hpp"

using namespace gfib;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

void report(int idx, const std::string& desc, bool pass, double secs) {
    char t[32];
    std::snprintf(t, sizeof t, "%.2f", secs);
    std::cout << "ACCEPTANCE " << idx << " " << (pass ? "PASS" : "FAIL") << " " << desc
              << " (" << t << "s)\n";
    std::cout.flush();
    if (!pass) ++g_failures;
}

void note(const std::string& msg) { std::cerr << "  note: " << msg << "\n"; }

struct RunResult {
    int status = -1;
    std::string out;
};

RunResult run_cli(const std::string& cli, const std::string& args) {
    const std::string cmd = cli + " " + args + " 2>/dev/null";
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) return r;
    char buf[4096];
    std::size_t got = 0;
    while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    const int rc = pclose(pipe);
    r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return r;
}

// 1. The tribonacci reference table, byte-exact through the CLI.
void criterion_1(const std::string& cli) {
    const auto t0 = Clock::now();
    const RunResult first = run_cli(cli, "table --d 3 --n-max 10 --decimals 2 --truncate");
    const double elapsed = seconds_since(t0);

    bool pass = (first.status == 0);
    const std::vector<std::string> want_exact = {"0",  "1",  "1",  "2",  "4",   "7",
                                                 "13", "24", "44", "81", "149"};
    const std::vector<std::string> want_approx = {"0.33",  "0.61",  "1.13", "2.09",
                                                  "3.84",  "7.07",  "13.01", "23.94",
                                                  "44.03", "80.99", "148.98"};
    std::istringstream in(first.out);
    std::string line;
    if (!std::getline(in, line) || line != "n exact approx error bound") {
        pass = false;
        note("missing or wrong table header: " + line);
    }
    for (std::size_t i = 0; i < want_exact.size(); ++i) {
        if (!std::getline(in, line)) {
            pass = false;
            note("table ended early at row " + std::to_string(i));
            break;
        }
        std::istringstream row(line);
        std::string n_col, exact_col, approx_col;
        row >> n_col >> exact_col >> approx_col;
        if (n_col != std::to_string(i) || exact_col != want_exact[i] ||
            approx_col != want_approx[i]) {
            pass = false;
            note("row mismatch: " + line);
        }
    }
    if (pass && elapsed >= 1.0) {
        pass = false;
        note("table command took too long");
    }
    if (pass) {
        const RunResult second =
            run_cli(cli, "table --d 3 --n-max 10 --decimals 2 --truncate");
        if (second.out != first.out) {
            pass = false;
            note("table output is not byte-deterministic");
        }
    }
    report(1, "tribonacci reference table via CLI, byte-exact, < 1 s", pass,
           seconds_since(t0));
}

// 2. Certified nearest-integer evaluation equals the exact recursion.
void criterion_2() {
    const auto t0 = Clock::now();
    bool pass = true;
    for (int d = 2; d <= 8 && pass; ++d) {
        const FibSequence seq = fib_sequence(Order(d), 1000);
        for (long long n = 1; n <= 1000; ++n) {
            const ClosedFormValue v = fib_closed(Order(d), n);
            if (!v.certified || v.rounded != seq.values[static_cast<std::size_t>(n)]) {
                pass = false;
                note("closed-form mismatch at d=" + std::to_string(d) +
                     " n=" + std::to_string(n));
                break;
            }
        }
        // Bind the matrix-power path in as well at the far end of the range.
        if (pass && fib_at(Order(d), 1000) != seq.values[1000]) {
            pass = false;
            note("matrix power disagrees with the sliding window at d=" + std::to_string(d));
        }
    }
    const double elapsed = seconds_since(t0);
    if (pass && elapsed >= 60.0) {
        pass = false;
        note("closed-form sweep took too long");
    }
    report(2, "rounding representation d=2..8, n=1..1000, < 60 s", pass, elapsed);
}

// 3. Certified error-bound envelope and the half-unit guarantee.
void criterion_3() {
    const auto t0 = Clock::now();
    bool pass = true;
    for (int d = 2; d <= 8 && pass; ++d) {
        for (long long n = -10; n <= 200; ++n) {
            // The cancellation in x_n = F_n - c q^{-(n-1)} demands about
            // n log2(1/(1-q)) working bits; twice the magnitude budget covers
            // that for every d >= 2 because 1 - q >= q^2.
            const long bits =
                n >= 1 ? std::max(256L, 2 * required_precision(Order(d), n)) : 256L;
            const ErrorRecord rec = error_term(Order(d), n, bits);
            const Interval mag = rec.x_n.abs_value();
            const Interval half = Interval::from_rational(mpq_class(1, 2), bits);
            if (cert_lt(mag, half) != Cert::True) {
                pass = false;
                note("half-unit certification failed at d=" + std::to_string(d) +
                     " n=" + std::to_string(n));
                break;
            }
            if (n >= 1 && cert_le(mag, rec.bound) != Cert::True) {
                pass = false;
                note("bound envelope violated at d=" + std::to_string(d) +
                     " n=" + std::to_string(n));
                break;
            }
        }
    }
    report(3, "error bound and half-unit guarantee, certified, d=2..8", pass,
           seconds_since(t0));
}

// 4. Brute-force composition counts match the shifted sequence.
void criterion_4() {
    const auto t0 = Clock::now();
    bool pass = true;
    for (int d = 2; d <= 5 && pass; ++d) {
        for (long long n = 0; n <= 20; ++n) {
            const CompositionSet s = enumerate_compositions(Order(d), n);
            if (mpz_class(static_cast<long>(s.size())) != fib_at(Order(d), n + 1)) {
                pass = false;
                note("composition count mismatch at d=" + std::to_string(d) +
                     " n=" + std::to_string(n));
                break;
            }
        }
    }
    const double elapsed = seconds_since(t0);
    if (pass && elapsed >= 30.0) {
        pass = false;
        note("enumeration took too long");
    }
    report(4, "composition counts equal F_{n+1}, d=2..5, n=0..20, < 30 s", pass, elapsed);
}

// 5. Renewal-mass identity u_k = q^k F_{k+1} as intersecting enclosures.
void criterion_5() {
    const auto t0 = Clock::now();
    bool pass = true;
    for (int d = 2; d <= 6 && pass; ++d) {
        const LifetimeDistribution dist = build_distribution(solve_q(Order(d), 128));
        const RenewalMass mass = renewal_mass_dp(dist, 200);
        const Interval q = dist.enclosure.to_interval();
        Interval qk = Interval::exact_long(1, q.precision());
        for (long long k = 0; k <= 200; ++k) {
            const Interval rhs =
                qk * Interval::exact_integer(fib_at(Order(d), k + 1), q.precision());
            if (!intersects(mass.values[static_cast<std::size_t>(k)], rhs)) {
                pass = false;
                note("occupancy identity failed at d=" + std::to_string(d) +
                     " k=" + std::to_string(k));
                break;
            }
            qk = qk * q;
        }
    }
    report(5, "occupancy identity u_k = q^k F_{k+1}, d=2..6, k=0..200", pass,
           seconds_since(t0));
}

// 6. Certified geometric convergence rate of u_n to the density limit.
void criterion_6() {
    const auto t0 = Clock::now();
    bool pass = true;
    for (int d = 2; d <= 6 && pass; ++d) {
        const LifetimeDistribution dist = build_distribution(solve_q(Order(d), 512));
        const RenewalMass mass = renewal_mass_dp(dist, 199);
        const Interval c =
            blackwell_constant(dist.enclosure, BlackwellMethod::ReciprocalMean);
        for (long long n = 1; n <= 200; ++n) {
            if (blackwell_rate_check(dist, mass, c, n) != Cert::True) {
                pass = false;
                note("rate certification failed at d=" + std::to_string(d) +
                     " n=" + std::to_string(n));
                break;
            }
        }
    }
    report(6, "geometric rate |u_{n-1} - c| <= (1-q)^n, certified, d=2..6", pass,
           seconds_since(t0));
}

// 7. New-better-than-used inequality across the whole support.
void criterion_7() {
    const auto t0 = Clock::now();
    bool pass = true;
    for (int d = 2; d <= 8 && pass; ++d) {
        const LifetimeDistribution dist = build_distribution(solve_q(Order(d), 128));
        for (long long i = 0; i < d && pass; ++i) {
            for (long long j = 0; j <= d; ++j) {
                if (nbu_check(dist, i, j) != Cert::True) {
                    pass = false;
                    note("NBU failed at d=" + std::to_string(d) + " i=" + std::to_string(i) +
                         " j=" + std::to_string(j));
                    break;
                }
            }
        }
    }
    report(7, "NBU inequality for all 0 <= i < d, 0 <= j <= d, d=2..8", pass,
           seconds_since(t0));
}

// 8. The two density-limit formulas agree; the characteristic residual
//    encloses zero.
void criterion_8() {
    const auto t0 = Clock::now();
    bool pass = true;
    for (int d = 2; d <= 16 && pass; ++d) {
        const RootEnclosure enc = solve_q(Order(d), 128);
        const Interval a = blackwell_constant(enc, BlackwellMethod::ReciprocalMean);
        const Interval b = blackwell_constant(enc, BlackwellMethod::ClosedForm);
        if (!intersects(a, b)) {
            pass = false;
            note("constant formulas disagree at d=" + std::to_string(d));
        }
        if (!characteristic_residual(enc).contains(mpq_class(0))) {
            pass = false;
            note("characteristic residual excludes zero at d=" + std::to_string(d));
        }
    }
    report(8, "density-limit formulas intersect and residual spans 0, d=2..16", pass,
           seconds_since(t0));
}

// 9. Monte Carlo estimates recover the exact renewal mass.
void criterion_9() {
    const auto t0 = Clock::now();
    bool pass = true;
    const LifetimeDistribution dist = build_distribution(solve_q(Order(3), 128));
    const double exact = renewal_mass_dp(dist, 10).values[10].mid().to_double();

    const SimulationReport main_run = simulate_first_passage(dist, 10, 1000000, 42);
    if (std::abs(main_run.estimate - exact) > 3.0 * main_run.std_error) {
        pass = false;
        note("seed-42 estimate " + std::to_string(main_run.estimate) +
             " misses the exact value " + std::to_string(exact) + " by over 3 se");
    }

    int covered = 0;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const SimulationReport r = simulate_first_passage(dist, 10, 100000, seed);
        if (r.ci_lo <= exact && exact <= r.ci_hi) ++covered;
    }
    if (covered < 17) {
        pass = false;
        note("only " + std::to_string(covered) + "/20 confidence intervals covered");
    }

    const double elapsed = seconds_since(t0);
    if (pass && elapsed >= 60.0) {
        pass = false;
        note("simulation took too long");
    }
    report(9, "Monte Carlo recovers u_10 (3 se at 10^6 reps; >= 17/20 CIs), < 60 s",
           pass, elapsed);
}

// 10. Every documented invariant suite passes.
void criterion_10() {
    const auto t0 = Clock::now();
    const VerifyReport rep = verify_all();
    bool pass = rep.all_pass();
    if (!pass) {
        for (const auto& r : rep.results)
            if (!r.pass) note("verify failure: " + r.suite + " " + r.name + " — " + r.detail);
    }
    std::size_t passed = 0;
    for (const auto& r : rep.results)
        if (r.pass) ++passed;
    report(10,
           "all invariant suites pass (" + std::to_string(passed) + "/" +
               std::to_string(rep.results.size()) + " checks)",
           pass, seconds_since(t0));
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: gfib_acceptance <path-to-gfib-cli>\n";
        return 64;
    }
    const std::string cli = argv[1];

    const auto guarded = [](int idx, const char* desc, auto&& fn) {
        try {
            fn();
        } catch (const std::exception& e) {
            note(std::string("exception: ") + e.what());
            report(idx, desc, false, 0.0);
        }
    };

    guarded(1, "tribonacci reference table via CLI", [&] { criterion_1(cli); });
    guarded(2, "rounding representation sweep", [] { criterion_2(); });
    guarded(3, "error bound envelope", [] { criterion_3(); });
    guarded(4, "composition counts", [] { criterion_4(); });
    guarded(5, "occupancy identity", [] { criterion_5(); });
    guarded(6, "geometric convergence rate", [] { criterion_6(); });
    guarded(7, "NBU inequality", [] { criterion_7(); });
    guarded(8, "density-limit constant consistency", [] { criterion_8(); });
    guarded(9, "Monte Carlo recovery", [] { criterion_9(); });
    guarded(10, "invariant suites", [] { criterion_10(); });

    return g_failures;
}
