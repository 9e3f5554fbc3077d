#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gfib/closedform.hpp"
#include "gfib/combinatorics.hpp"
#include "gfib/errors.hpp"
#include "gfib/exact.hpp"
#include "gfib/format.hpp"
#include "gfib/interval.hpp"
#include "gfib/order.hpp"
#include "gfib/renewal.hpp"
#include "gfib/roots.hpp"
#include "gfib/verify.hpp"
#include "gfib/version.hpp"

namespace {

using gfib::Interval;
using gfib::Order;
using gfib::Real;
using ordered_json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerifyFailed = 2;
constexpr int kExitPrecision = 3;

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string csv_safe(std::string s) {
    for (auto& ch : s)
        if (ch == ',') ch = ';';
    return s;
}

ordered_json make_meta(long precision_bits) {
    return ordered_json{{"precision_bits", precision_bits}, {"version", gfib::kVersion}};
}

std::string dump_json(ordered_json j) { return j.dump(2) + "\n"; }

// ---------------------------------------------------------------------------

std::string handle_exact(Order d, long long n, const std::string& format) {
    const std::string value = gfib::fib_at(d, n).get_str();
    if (format == "csv") return "n,exact\n" + std::to_string(n) + "," + value + "\n";
    if (format == "json") {
        ordered_json j;
        j["params"] = {{"command", "exact"}, {"d", d.value()}, {"n", n}};
        j["rows"] = ordered_json::array({ordered_json{{"n", n}, {"exact", value}}});
        j["meta"] = make_meta(0);
        return dump_json(j);
    }
    return value + "\n";
}

std::string handle_closed(Order d, long long n, const std::string& format) {
    const gfib::ClosedFormValue v = gfib::fib_closed(d, n);
    const std::string rounded = v.rounded.get_str();
    const std::string mid = gfib::to_scientific(v.approx.mid());
    const std::string radius = gfib::to_scientific(v.approx.radius());
    if (format == "csv") {
        return "d,n,rounded,certified,precision_bits,approx_mid,approx_radius\n" +
               std::to_string(d.value()) + "," + std::to_string(n) + "," + rounded + "," +
               (v.certified ? "true" : "false") + "," + std::to_string(v.precision_bits) + "," +
               mid + "," + radius + "\n";
    }
    if (format == "json") {
        ordered_json j;
        j["params"] = {{"command", "closed"}, {"d", d.value()}, {"n", n}};
        j["rows"] = ordered_json::array({ordered_json{{"n", n},
                                                      {"rounded", rounded},
                                                      {"certified", v.certified},
                                                      {"approx_mid", mid},
                                                      {"approx_radius", radius}}});
        j["meta"] = make_meta(v.precision_bits);
        return dump_json(j);
    }
    return rounded + "\n";
}

std::string handle_root(Order d, long precision_bits, const std::string& format, int decimals,
                        bool truncate) {
    const gfib::RootEnclosure enc = gfib::solve_q(d, precision_bits);
    const Interval q = enc.to_interval();
    const std::string q_fixed = gfib::decimal_fixed(q.mid(), decimals, truncate);
    const std::string q_radius = gfib::to_scientific(q.radius());
    if (format == "csv") {
        return "d,precision_bits,q,q_radius\n" + std::to_string(d.value()) + "," +
               std::to_string(precision_bits) + "," + q_fixed + "," + q_radius + "\n";
    }
    if (format == "json") {
        ordered_json j;
        j["params"] = {{"command", "root"}, {"d", d.value()}, {"precision_bits", precision_bits}};
        j["rows"] = ordered_json::array({ordered_json{{"d", d.value()},
                                                      {"precision_bits", precision_bits},
                                                      {"q_mid", gfib::to_scientific(q.mid())},
                                                      {"q_radius", q_radius},
                                                      {"q_lo", enc.lo.to_decimal_string()},
                                                      {"q_hi", enc.hi.to_decimal_string()}}});
        j["meta"] = make_meta(precision_bits);
        return dump_json(j);
    }
    std::string out;
    out += "d " + std::to_string(d.value()) + "\n";
    out += "precision_bits " + std::to_string(precision_bits) + "\n";
    out += "q " + q_fixed + "\n";
    out += "q_radius " + q_radius + "\n";
    return out;
}

std::string handle_constant(Order d, long precision_bits, const std::string& format,
                            int decimals, bool truncate) {
    const gfib::RootEnclosure enc = gfib::solve_q(d, precision_bits);
    const Interval mean = gfib::mean_lifetime(enc);
    const Interval c_recip = gfib::blackwell_constant(enc, gfib::BlackwellMethod::ReciprocalMean);
    const Interval c_closed = gfib::blackwell_constant(enc, gfib::BlackwellMethod::ClosedForm);
    const std::string mean_fixed = gfib::decimal_fixed(mean.mid(), decimals, truncate);
    const std::string mean_radius = gfib::to_scientific(mean.radius());
    const std::string c_fixed = gfib::decimal_fixed(c_recip.mid(), decimals, truncate);
    const std::string c_radius = gfib::to_scientific(c_recip.radius());
    const std::string c2_fixed = gfib::decimal_fixed(c_closed.mid(), decimals, truncate);
    const std::string c2_radius = gfib::to_scientific(c_closed.radius());
    if (format == "csv") {
        return "d,precision_bits,mean_lifetime,mean_lifetime_radius,c,c_radius,c_closed_form,"
               "c_closed_form_radius\n" +
               std::to_string(d.value()) + "," + std::to_string(precision_bits) + "," +
               mean_fixed + "," + mean_radius + "," + c_fixed + "," + c_radius + "," + c2_fixed +
               "," + c2_radius + "\n";
    }
    if (format == "json") {
        ordered_json j;
        j["params"] = {{"command", "constant"},
                       {"d", d.value()},
                       {"precision_bits", precision_bits}};
        j["rows"] = ordered_json::array(
            {ordered_json{{"d", d.value()},
                          {"precision_bits", precision_bits},
                          {"mean_lifetime_mid", gfib::to_scientific(mean.mid())},
                          {"mean_lifetime_radius", mean_radius},
                          {"c_mid", gfib::to_scientific(c_recip.mid())},
                          {"c_radius", c_radius},
                          {"c_closed_form_mid", gfib::to_scientific(c_closed.mid())},
                          {"c_closed_form_radius", c2_radius}}});
        j["meta"] = make_meta(precision_bits);
        return dump_json(j);
    }
    std::string out;
    out += "d " + std::to_string(d.value()) + "\n";
    out += "precision_bits " + std::to_string(precision_bits) + "\n";
    out += "mean_lifetime " + mean_fixed + "\n";
    out += "mean_lifetime_radius " + mean_radius + "\n";
    out += "c " + c_fixed + "\n";
    out += "c_radius " + c_radius + "\n";
    out += "c_closed_form " + c2_fixed + "\n";
    out += "c_closed_form_radius " + c2_radius + "\n";
    return out;
}

struct RenderedRow {
    long long n = 0;
    std::string exact;
    std::string approx, approx_mid, approx_radius;
    std::string error, error_mid, error_radius;
    std::string bound, bound_mid, bound_radius;
};

std::string handle_table(Order d, long long n_max, long precision_bits,
                         const std::string& format, int decimals, bool truncate) {
    const gfib::FibSequence seq = gfib::fib_sequence(d, n_max);
    long max_bits_used = precision_bits;
    std::vector<RenderedRow> rows;
    rows.reserve(static_cast<std::size_t>(n_max) + 1);
    for (long long n = 0; n <= n_max; ++n) {
        long row_bits = precision_bits;
        if (n >= 1) row_bits = std::max(precision_bits, gfib::required_precision(d, n));
        max_bits_used = std::max(max_bits_used, row_bits);
        const Interval approx = gfib::approx_value(d, n, row_bits);
        const Interval exact_iv =
            Interval::exact_integer(seq.values[static_cast<std::size_t>(n)], approx.precision());
        const Interval error = exact_iv - approx;
        const Interval bound = gfib::theorem_bound(d, n, row_bits);
        RenderedRow r;
        r.n = n;
        r.exact = seq.values[static_cast<std::size_t>(n)].get_str();
        r.approx = gfib::decimal_fixed(approx.mid(), decimals, truncate);
        r.approx_mid = gfib::to_scientific(approx.mid());
        r.approx_radius = gfib::to_scientific(approx.radius());
        r.error = gfib::decimal_fixed(error.mid(), decimals, truncate);
        r.error_mid = gfib::to_scientific(error.mid());
        r.error_radius = gfib::to_scientific(error.radius());
        r.bound = gfib::decimal_fixed(bound.mid(), decimals, truncate);
        r.bound_mid = gfib::to_scientific(bound.mid());
        r.bound_radius = gfib::to_scientific(bound.radius());
        rows.push_back(std::move(r));
    }

    if (format == "csv") {
        std::string out = "n,exact,approx,error,bound\n";
        for (const auto& r : rows)
            out += std::to_string(r.n) + "," + r.exact + "," + r.approx + "," + r.error + "," +
                   r.bound + "\n";
        return out;
    }
    if (format == "json") {
        ordered_json j;
        j["params"] = {{"command", "table"},     {"d", d.value()},
                       {"n_max", n_max},         {"precision_bits", precision_bits},
                       {"decimals", decimals},   {"truncate", truncate}};
        j["rows"] = ordered_json::array();
        for (const auto& r : rows) {
            j["rows"].push_back(ordered_json{{"n", r.n},
                                             {"exact", r.exact},
                                             {"approx", r.approx},
                                             {"approx_mid", r.approx_mid},
                                             {"approx_radius", r.approx_radius},
                                             {"error", r.error},
                                             {"error_mid", r.error_mid},
                                             {"error_radius", r.error_radius},
                                             {"bound", r.bound},
                                             {"bound_mid", r.bound_mid},
                                             {"bound_radius", r.bound_radius}});
        }
        j["meta"] = make_meta(max_bits_used);
        return dump_json(j);
    }
    std::string out = "n exact approx error bound\n";
    for (const auto& r : rows)
        out += std::to_string(r.n) + " " + r.exact + " " + r.approx + " " + r.error + " " +
               r.bound + "\n";
    return out;
}

std::string parts_joined(const std::vector<int>& parts) {
    if (parts.empty()) return "()";
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) s += "+";
        s += std::to_string(parts[i]);
    }
    return s;
}

std::string handle_compositions(Order d, long long n, long long cap, bool count_only,
                                const std::string& format) {
    if (count_only) {
        const std::string count = gfib::count_compositions(d, n).get_str();
        if (format == "csv") return "n,count\n" + std::to_string(n) + "," + count + "\n";
        if (format == "json") {
            ordered_json j;
            j["params"] = {{"command", "compositions"},
                           {"d", d.value()},
                           {"n", n},
                           {"count_only", true}};
            j["rows"] = ordered_json::array({ordered_json{{"n", n}, {"count", count}}});
            j["meta"] = make_meta(0);
            return dump_json(j);
        }
        return count + "\n";
    }
    const gfib::CompositionSet set = gfib::enumerate_compositions(d, n, cap);
    if (format == "csv") {
        std::string out = "parts\n";
        for (const auto& comp : set.compositions) out += parts_joined(comp) + "\n";
        return out;
    }
    if (format == "json") {
        ordered_json j;
        j["params"] = {
            {"command", "compositions"}, {"d", d.value()}, {"n", n}, {"cap", cap}};
        j["rows"] = ordered_json::array();
        for (const auto& comp : set.compositions)
            j["rows"].push_back(ordered_json{{"parts", comp}});
        j["meta"] = make_meta(0);
        return dump_json(j);
    }
    std::string out;
    for (const auto& comp : set.compositions) out += parts_joined(comp) + "\n";
    return out;
}

std::string handle_simulate(Order d, long long n, long long reps, std::uint64_t seed,
                            long precision_bits, const std::string& format) {
    const gfib::LifetimeDistribution dist =
        gfib::build_distribution(gfib::solve_q(d, precision_bits));
    const gfib::SimulationReport rep = gfib::simulate_first_passage(dist, n, reps, seed);
    if (format == "csv") {
        return "d,n,replications,seed,hits,estimate,std_error,ci_lo,ci_hi\n" +
               std::to_string(rep.d.value()) + "," + std::to_string(rep.n) + "," +
               std::to_string(rep.replications) + "," + std::to_string(rep.seed) + "," +
               std::to_string(rep.hits) + "," + fmt_double(rep.estimate) + "," +
               fmt_double(rep.std_error) + "," + fmt_double(rep.ci_lo) + "," +
               fmt_double(rep.ci_hi) + "\n";
    }
    if (format == "json") {
        ordered_json j;
        j["params"] = {{"command", "simulate"},
                       {"d", d.value()},
                       {"n", n},
                       {"replications", reps},
                       {"seed", seed},
                       {"precision_bits", precision_bits}};
        j["rows"] = ordered_json::array({ordered_json{{"d", rep.d.value()},
                                                      {"n", rep.n},
                                                      {"replications", rep.replications},
                                                      {"seed", rep.seed},
                                                      {"hits", rep.hits},
                                                      {"estimate", rep.estimate},
                                                      {"std_error", rep.std_error},
                                                      {"ci_lo", rep.ci_lo},
                                                      {"ci_hi", rep.ci_hi}}});
        j["meta"] = make_meta(precision_bits);
        return dump_json(j);
    }
    std::string out;
    out += "d " + std::to_string(rep.d.value()) + "\n";
    out += "n " + std::to_string(rep.n) + "\n";
    out += "replications " + std::to_string(rep.replications) + "\n";
    out += "seed " + std::to_string(rep.seed) + "\n";
    out += "hits " + std::to_string(rep.hits) + "\n";
    out += "estimate " + fmt_double(rep.estimate) + "\n";
    out += "std_error " + fmt_double(rep.std_error) + "\n";
    out += "ci_lo " + fmt_double(rep.ci_lo) + "\n";
    out += "ci_hi " + fmt_double(rep.ci_hi) + "\n";
    return out;
}

std::string handle_verify(const std::string& format, int* exit_code) {
    const gfib::VerifyReport report = gfib::verify_all();
    *exit_code = report.all_pass() ? kExitOk : kExitVerifyFailed;
    std::size_t passed = 0;
    for (const auto& r : report.results)
        if (r.pass) ++passed;
    if (format == "csv") {
        std::string out = "suite,name,pass,detail\n";
        for (const auto& r : report.results)
            out += r.suite + "," + r.name + "," + (r.pass ? "true" : "false") + "," +
                   csv_safe(r.detail) + "\n";
        return out;
    }
    if (format == "json") {
        ordered_json j;
        j["params"] = {{"command", "verify"}};
        j["rows"] = ordered_json::array();
        for (const auto& r : report.results)
            j["rows"].push_back(ordered_json{
                {"suite", r.suite}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
        j["meta"] = make_meta(0);
        j["meta"]["checks_passed"] = passed;
        j["meta"]["checks_total"] = report.results.size();
        return dump_json(j);
    }
    std::string out;
    for (const auto& r : report.results) {
        out += (r.pass ? "PASS " : "FAIL ") + r.suite + " " + r.name + " — " + r.detail + "\n";
    }
    out += "SUMMARY " + std::to_string(passed) + "/" + std::to_string(report.results.size()) +
           " checks passed\n";
    return out;
}

std::string handle_bench(const std::string& format) {
    struct BenchRow {
        std::string op;
        int d;
        long long n;
        double ms;
    };
    std::vector<BenchRow> rows;
    const int orders[] = {2, 3, 8};
    const long long sizes[] = {1000, 10000};
    for (int d : orders) {
        for (long long n : sizes) {
            const auto time_ms = [](auto&& fn) {
                const auto t0 = std::chrono::steady_clock::now();
                fn();
                const auto t1 = std::chrono::steady_clock::now();
                return std::chrono::duration<double, std::milli>(t1 - t0).count();
            };
            rows.push_back(
                {"fib_sequence", d, n, time_ms([&] { gfib::fib_sequence(Order(d), n); })});
            rows.push_back({"fib_at", d, n, time_ms([&] { gfib::fib_at(Order(d), n); })});
            rows.push_back(
                {"fib_closed", d, n, time_ms([&] { gfib::fib_closed(Order(d), n); })});
        }
    }
    const auto ms_str = [](double ms) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.3f", ms);
        return std::string(buf);
    };
    if (format == "csv") {
        std::string out = "op,d,n,ms\n";
        for (const auto& r : rows)
            out += r.op + "," + std::to_string(r.d) + "," + std::to_string(r.n) + "," +
                   ms_str(r.ms) + "\n";
        return out;
    }
    if (format == "json") {
        ordered_json j;
        j["params"] = {{"command", "bench"}};
        j["rows"] = ordered_json::array();
        for (const auto& r : rows)
            j["rows"].push_back(
                ordered_json{{"op", r.op}, {"d", r.d}, {"n", r.n}, {"ms", r.ms}});
        j["meta"] = make_meta(0);
        return dump_json(j);
    }
    std::string out = "op d n ms\n";
    for (const auto& r : rows)
        out += r.op + " " + std::to_string(r.d) + " " + std::to_string(r.n) + " " +
               ms_str(r.ms) + "\n";
    return out;
}

int emit(const std::string& bytes, const std::string& out_path) {
    std::fwrite(bytes.data(), 1, bytes.size(), stdout);
    std::fflush(stdout);
    if (!out_path.empty()) {
        std::ofstream file(out_path, std::ios::binary);
        if (!file) {
            std::cerr << "error: cannot open output file " << out_path << "\n";
            return kExitUsage;
        }
        file.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
        if (!file) {
            std::cerr << "error: write to " << out_path << " failed\n";
            return kExitUsage;
        }
    }
    return kExitOk;
}

bool apply_env_ceiling(std::string* err) {
    const char* env = std::getenv("GFIB_MAX_PRECISION_BITS");
    if (env == nullptr) return true;
    try {
        std::size_t pos = 0;
        const long bits = std::stol(env, &pos);
        if (pos != std::strlen(env)) throw std::invalid_argument("trailing characters");
        gfib::set_max_precision_bits(bits);
    } catch (const std::exception& e) {
        *err = std::string("invalid GFIB_MAX_PRECISION_BITS value '") + env + "': " + e.what();
        return false;
    }
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"d-generalized Fibonacci numbers: exact values, certified closed form, "
                 "compositions and renewal-process checks"};
    app.require_subcommand(1);

    int d = 2;
    long long n = 1;
    long long n_max = 10;
    long precision_bits = gfib::kDefaultPrecisionBits;
    std::string format = "text";
    int decimals = 6;
    bool truncate = false;
    std::uint64_t seed = 42;
    long long reps = 100000;
    long long cap = gfib::kDefaultEnumerationCap;
    bool count_only = false;
    std::string out_path;

    const auto add_common = [&](CLI::App* sub, bool with_precision) {
        sub->add_option("--format", format, "Output format")
            ->check(CLI::IsMember({"text", "csv", "json"}));
        sub->add_option("--out", out_path, "Also write the output bytes to this file");
        if (with_precision)
            sub->add_option("--precision-bits", precision_bits, "Working precision in bits");
    };

    CLI::App* exact_cmd = app.add_subcommand("exact", "Exact F_n by companion-matrix power");
    exact_cmd->add_option("--d", d, "Order of the recurrence (>= 2)")->required();
    exact_cmd->add_option("--n", n, "Index n (any integer)")->required();
    add_common(exact_cmd, false);

    CLI::App* closed_cmd =
        app.add_subcommand("closed", "Certified nearest-integer closed form for F_n");
    closed_cmd->add_option("--d", d, "Order of the recurrence (>= 2)")->required();
    closed_cmd->add_option("--n", n, "Index n (any integer)")->required();
    add_common(closed_cmd, false);

    CLI::App* root_cmd = app.add_subcommand("root", "Certified enclosure of the root q");
    root_cmd->add_option("--d", d, "Order of the recurrence (>= 2)")->required();
    root_cmd->add_option("--decimals", decimals, "Fraction digits in fixed-point output");
    root_cmd->add_flag("--truncate", truncate, "Truncate toward zero instead of rounding");
    add_common(root_cmd, true);

    CLI::App* constant_cmd =
        app.add_subcommand("constant", "Mean lifetime E[X1] and renewal constant c_d");
    constant_cmd->add_option("--d", d, "Order of the recurrence (>= 2)")->required();
    constant_cmd->add_option("--decimals", decimals, "Fraction digits in fixed-point output");
    constant_cmd->add_flag("--truncate", truncate, "Truncate toward zero instead of rounding");
    add_common(constant_cmd, true);

    CLI::App* table_cmd =
        app.add_subcommand("table", "Rows n, exact, approx, error, bound for n = 0..n-max");
    table_cmd->add_option("--d", d, "Order of the recurrence (>= 2)")->required();
    table_cmd->add_option("--n-max", n_max, "Last row index")->required();
    table_cmd->add_option("--decimals", decimals, "Fraction digits in fixed-point output");
    table_cmd->add_flag("--truncate", truncate,
                        "Truncate toward zero (reproduces truncated reference tables)");
    add_common(table_cmd, true);

    CLI::App* comp_cmd =
        app.add_subcommand("compositions", "Compositions of n with parts in 1..d");
    comp_cmd->add_option("--d", d, "Order of the recurrence (>= 2)")->required();
    comp_cmd->add_option("--n", n, "Total to compose (any integer)")->required();
    comp_cmd->add_option("--cap", cap, "Enumeration explosion guard");
    comp_cmd->add_flag("--count", count_only, "Print only the count (works beyond the cap)");
    add_common(comp_cmd, false);

    CLI::App* simulate_cmd =
        app.add_subcommand("simulate", "Monte Carlo estimate of the renewal mass u_n");
    simulate_cmd->add_option("--d", d, "Order of the recurrence (>= 2)")->required();
    simulate_cmd->add_option("--n", n, "Target level (>= 1)")->required();
    simulate_cmd->add_option("--reps", reps, "Number of replications");
    simulate_cmd->add_option("--seed", seed, "64-bit seed");
    add_common(simulate_cmd, true);

    CLI::App* verify_cmd =
        app.add_subcommand("verify", "Run every invariant suite in every module");
    add_common(verify_cmd, false);

    CLI::App* bench_cmd =
        app.add_subcommand("bench", "Wall time per call across a (d, n) grid");
    add_common(bench_cmd, false);

    {
        std::string env_error;
        if (!apply_env_ceiling(&env_error)) {
            std::cerr << "error: " << env_error << "\n";
            return kExitUsage;
        }
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);  // --help and friends
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        std::string output;
        int exit_code = kExitOk;
        if (exact_cmd->parsed()) {
            output = handle_exact(Order(d), n, format);
        } else if (closed_cmd->parsed()) {
            output = handle_closed(Order(d), n, format);
        } else if (root_cmd->parsed()) {
            output = handle_root(Order(d), precision_bits, format, decimals, truncate);
        } else if (constant_cmd->parsed()) {
            output = handle_constant(Order(d), precision_bits, format, decimals, truncate);
        } else if (table_cmd->parsed()) {
            output = handle_table(Order(d), n_max, precision_bits, format, decimals, truncate);
        } else if (comp_cmd->parsed()) {
            output = handle_compositions(Order(d), n, cap, count_only, format);
        } else if (simulate_cmd->parsed()) {
            output = handle_simulate(Order(d), n, reps, seed, precision_bits, format);
        } else if (verify_cmd->parsed()) {
            output = handle_verify(format, &exit_code);
        } else if (bench_cmd->parsed()) {
            output = handle_bench(format);
        }
        const int emit_code = emit(output, out_path);
        return emit_code != kExitOk ? emit_code : exit_code;
    } catch (const gfib::PrecisionCeilingError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecision;
    } catch (const gfib::PrecisionRefinementNeeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecision;
    } catch (const gfib::EnumerationCapError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
