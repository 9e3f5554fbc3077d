#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"

#include "gfib/closedform.hpp"
#include "gfib/errors.hpp"
#include "gfib/format.hpp"
#include "gfib/renewal.hpp"
#include "gfib/roots.hpp"

namespace {

struct RunResult {
    int status = -1;
    std::string out;
};

// Runs the installed binary through /bin/sh, capturing stdout only.
RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    const std::string cmd = env_prefix + std::string(GFIB_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t got = 0;
    while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    const int rc = pclose(pipe);
    RunResult r;
    r.out = std::move(out);
    r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return r;
}

std::vector<std::string> lines_of(const std::string& s) {
    std::vector<std::string> lines;
    std::istringstream in(s);
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

}  // namespace

TEST_CASE("exact subcommand prints the bare integer") {
    RunResult r = run_cli("exact --d 3 --n 10");
    CHECK(r.status == 0);
    CHECK(r.out == "149\n");
    CHECK(run_cli("exact --d 2 --n 50").out == "12586269025\n");
    CHECK(run_cli("exact --d 4 --n -7").out == "0\n");
}

TEST_CASE("closed subcommand prints the certified rounded integer") {
    RunResult r = run_cli("closed --d 3 --n 6");
    CHECK(r.status == 0);
    CHECK(r.out == "13\n");
    CHECK(run_cli("closed --d 3 --n 0").out == "0\n");
}

TEST_CASE("table reproduces the truncated reference rows") {
    RunResult r = run_cli("table --d 3 --n-max 10 --decimals 2 --truncate");
    CHECK(r.status == 0);
    std::vector<std::string> lines = lines_of(r.out);
    REQUIRE(lines.size() == 12);
    CHECK(lines[0] == "n exact approx error bound");
    const std::vector<std::string> approx = {"0.33", "0.61",  "1.13",  "2.09",
                                             "3.84", "7.07",  "13.01", "23.94",
                                             "44.03", "80.99", "148.98"};
    const std::vector<std::string> exact = {"0",  "1",  "1",  "2",  "4",   "7",
                                            "13", "24", "44", "81", "149"};
    for (std::size_t i = 0; i < approx.size(); ++i) {
        CAPTURE(i);
        std::istringstream row(lines[i + 1]);
        std::string n_col, exact_col, approx_col;
        row >> n_col >> exact_col >> approx_col;
        CHECK(n_col == std::to_string(i));
        CHECK(exact_col == exact[i]);
        CHECK(approx_col == approx[i]);
    }
}

TEST_CASE("output bytes are deterministic across runs") {
    const std::string args = "table --d 3 --n-max 10 --decimals 2 --truncate --format json";
    CHECK(run_cli(args).out == run_cli(args).out);
    const std::string sim = "simulate --d 3 --n 10 --reps 20000 --seed 42";
    CHECK(run_cli(sim).out == run_cli(sim).out);
}

TEST_CASE("table csv carries the documented header") {
    RunResult r = run_cli("table --d 2 --n-max 3 --format csv");
    CHECK(r.status == 0);
    std::vector<std::string> lines = lines_of(r.out);
    REQUIRE(lines.size() == 5);
    CHECK(lines[0] == "n,exact,approx,error,bound");
    CHECK(lines[1].rfind("0,0,", 0) == 0);
    CHECK(lines[4].rfind("3,2,", 0) == 0);
}

TEST_CASE("closed json round-trips the enclosure midpoint") {
    RunResult r = run_cli("closed --d 3 --n 10 --format json");
    CHECK(r.status == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["params"]["command"] == "closed");
    CHECK(j["rows"][0]["rounded"] == "149");
    CHECK(j["rows"][0]["certified"] == true);
    CHECK(j["meta"]["version"] == "0.1.0");

    gfib::ClosedFormValue v = gfib::fib_closed(gfib::Order(3), 10);
    CHECK(j["meta"]["precision_bits"].get<long>() == v.precision_bits);
    gfib::Real mid = v.approx.mid();
    gfib::Real parsed = gfib::parse_real(j["rows"][0]["approx_mid"].get<std::string>(),
                                         mid.precision());
    CHECK(cmp(mid, parsed) == 0);
}

TEST_CASE("root json exposes the exact dyadic bracket") {
    RunResult r = run_cli("root --d 2 --precision-bits 96 --format json");
    CHECK(r.status == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    gfib::RootEnclosure enc = gfib::solve_q(gfib::Order(2), 96);
    CHECK(j["rows"][0]["q_lo"].get<std::string>() == enc.lo.to_decimal_string());
    CHECK(j["rows"][0]["q_hi"].get<std::string>() == enc.hi.to_decimal_string());
}

TEST_CASE("simulate json mirrors the in-process report exactly") {
    RunResult r = run_cli("simulate --d 3 --n 10 --reps 30000 --seed 7 --format json");
    CHECK(r.status == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    gfib::LifetimeDistribution dist =
        gfib::build_distribution(gfib::solve_q(gfib::Order(3), gfib::kDefaultPrecisionBits));
    gfib::SimulationReport rep = gfib::simulate_first_passage(dist, 10, 30000, 7);
    CHECK(j["rows"][0]["hits"].get<long long>() == rep.hits);
    CHECK(j["rows"][0]["estimate"].get<double>() == rep.estimate);
    CHECK(j["rows"][0]["std_error"].get<double>() == rep.std_error);
}

TEST_CASE("compositions text output joins parts with plus signs") {
    CHECK(run_cli("compositions --d 2 --n 3").out == "1+1+1\n1+2\n2+1\n");
    CHECK(run_cli("compositions --d 3 --n 0").out == "()\n");
    CHECK(run_cli("compositions --d 3 --n -2").out == "");
    CHECK(run_cli("compositions --d 2 --n 40 --count").out == "165580141\n");
}

TEST_CASE("constant text output lists both evaluation methods") {
    RunResult r = run_cli("constant --d 3 --decimals 6");
    CHECK(r.status == 0);
    std::vector<std::string> lines = lines_of(r.out);
    REQUIRE(lines.size() == 8);
    CHECK(lines[2] == "mean_lifetime 1.617024");
    CHECK(lines[4] == "c 0.618420");
    CHECK(lines[6] == "c_closed_form 0.618420");
}

TEST_CASE("usage errors exit with status 1") {
    CHECK(run_cli("exact --d 1 --n 5").status == 1);
    CHECK(run_cli("nosuchcommand").status == 1);
    CHECK(run_cli("exact --n 5").status == 1);          // missing --d
    CHECK(run_cli("root --d 2 --precision-bits 4").status == 1);
    CHECK(run_cli("simulate --d 3 --n 0").status == 1);
    CHECK(run_cli("compositions --d 2 --n 31").status == 1);  // over the cap
    CHECK(run_cli("exact --d 2 --n 3 --format yaml").status == 1);
}

TEST_CASE("precision failures exit with status 3") {
    CHECK(run_cli("root --d 2 --precision-bits 2000000").status == 3);
    CHECK(run_cli("closed --d 2 --n 5000", "GFIB_MAX_PRECISION_BITS=64 ").status == 3);
}

TEST_CASE("the environment ceiling must be a clean integer") {
    CHECK(run_cli("exact --d 2 --n 3", "GFIB_MAX_PRECISION_BITS=abc ").status == 1);
    CHECK(run_cli("exact --d 2 --n 3", "GFIB_MAX_PRECISION_BITS=128k ").status == 1);
    // A generous ceiling is accepted silently.
    RunResult ok = run_cli("closed --d 2 --n 50", "GFIB_MAX_PRECISION_BITS=4096 ");
    CHECK(ok.status == 0);
    CHECK(ok.out == "12586269025\n");
}

TEST_CASE("help exits cleanly") {
    CHECK(run_cli("--help").status == 0);
    CHECK(run_cli("table --help").status == 0);
}

TEST_CASE("--out duplicates stdout bytes into a file") {
    const char* path = "cli_out_check.tmp";
    RunResult r = run_cli(std::string("table --d 2 --n-max 5 --format csv --out ") + path);
    CHECK(r.status == 0);
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream file_bytes;
    file_bytes << in.rdbuf();
    CHECK(file_bytes.str() == r.out);
    in.close();
    std::remove(path);
}

TEST_CASE("verify runs every suite and exits zero when all pass") {
    RunResult r = run_cli("verify");
    CHECK(r.status == 0);
    std::vector<std::string> lines = lines_of(r.out);
    REQUIRE(lines.size() >= 2);
    for (std::size_t i = 0; i + 1 < lines.size(); ++i) {
        CAPTURE(lines[i]);
        CHECK(lines[i].rfind("PASS ", 0) == 0);
    }
    const std::string& last = lines.back();
    CHECK(last.rfind("SUMMARY ", 0) == 0);
    CHECK(last.find("checks passed") != std::string::npos);
}
