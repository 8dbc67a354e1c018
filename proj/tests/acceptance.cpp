// Acceptance suite: one line per criterion, [PASS]/[FAIL] prefix, nonzero
// exit when any selected criterion fails. An optional argv[1] selects a
// single criterion (1..7).

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "ehp/asymptotics.hpp"
#include "ehp/bounds.hpp"
#include "ehp/core.hpp"
#include "ehp/known_data.hpp"
#include "ehp/verifier.hpp"

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool pass;
    std::string detail;
};

double seconds_since(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string joined_violations(const ehp::VerificationReport& report, std::size_t max_shown = 4)
{
    std::ostringstream os;
    for (std::size_t i = 0; i < report.violations.size() && i < max_shown; ++i) {
        const auto& v = report.violations[i];
        if (i)
            os << "; ";
        os << "p=" << v.p << " (n=" << v.n << ",q=" << v.q << ") " << v.relation << ": " << v.lhs
           << " vs " << v.rhs;
    }
    if (report.violations.size() > max_shown)
        os << "; +" << report.violations.size() - max_shown << " more";
    return os.str();
}

Outcome criterion_1()
{
    const auto start = Clock::now();
    std::uint64_t checks = 0;
    std::vector<std::string> problems;
    for (long long p : {2LL, 3LL, 5LL, 7LL}) {
        ehp::EvalContext ctx(p);
        const auto report = ehp::check_theorem(ctx, 40, 60);
        checks += report.checks_run;
        if (!report.passed())
            problems.push_back(joined_violations(report));
    }
    const double elapsed = seconds_since(start);
    std::ostringstream os;
    os << checks << " cells in " << std::fixed;
    os.precision(2);
    os << elapsed << " s";
    if (!problems.empty()) {
        os << "; violations: ";
        for (const auto& problem : problems)
            os << problem << " ";
    }
    if (elapsed >= 10.0)
        os << "; over the 10 s budget";
    return {problems.empty() && elapsed < 10.0, os.str()};
}

Outcome criterion_2()
{
    const auto start = Clock::now();
    std::vector<std::string> problems;

    const auto h = ehp::h_sequence(80);
    for (int q = 1; q <= 80; ++q) {
        if (h[q - 1] < ehp::fibonacci(q))
            problems.push_back("H_" + std::to_string(q) + " below F_" + std::to_string(q));
        if (q <= 5 && h[q - 1] != ehp::fibonacci(q))
            problems.push_back("H_" + std::to_string(q) + " not equal to F_" + std::to_string(q));
    }

    for (long long p : {2LL, 3LL, 5LL, 7LL}) {
        ehp::EvalContext ctx(p);
        for (int j = 0; j <= 6; ++j) {
            const long long q = 2 * p + static_cast<long long>(j) * (4 * p + 5);
            const auto t = ctx.t_value({3, static_cast<int>(q)});
            const auto floor = ehp::fibonacci(2 * j + 1);
            if (t < floor) {
                std::ostringstream os;
                os << "t_" << p << "(3," << q << ")=" << t << " < F_" << 2 * j + 1 << "="
                   << floor;
                problems.push_back(os.str());
            }
        }
    }

    const double elapsed = seconds_since(start);
    std::ostringstream os;
    if (problems.empty()) {
        os << "H-floor q<=80 with equality q<=5, odd-prime floors j<=6, " << std::fixed;
        os.precision(2);
        os << elapsed << " s";
    } else {
        os << problems.size() << " violations: ";
        for (std::size_t i = 0; i < problems.size() && i < 5; ++i)
            os << (i ? "; " : "") << problems[i];
        if (problems.size() > 5)
            os << "; +" << problems.size() - 5 << " more";
    }
    if (elapsed >= 30.0)
        os << "; over the 30 s budget";
    return {problems.empty() && elapsed < 30.0, os.str()};
}

Outcome criterion_3()
{
    const auto start = Clock::now();
    const auto est = ehp::estimate_growth(200, 20);
    const double elapsed = seconds_since(start);
    const bool nu_ok = std::fabs(est.nu_hat - 1.794) <= 0.005;
    const bool k_ok = std::fabs(est.k_hat - 0.255) <= 0.02;
    std::ostringstream os;
    os.precision(6);
    os << "nu_hat=" << est.nu_hat << " (target 1.794+-0.005), k_hat=" << est.k_hat
       << " (target 0.255+-0.02), " << std::fixed;
    os.precision(2);
    os << elapsed << " s";
    return {nu_ok && k_ok && elapsed < 10.0, os.str()};
}

Outcome criterion_4()
{
    std::vector<std::string> problems;
    ehp::EvalContext c2(2);
    const int expected[6] = {1, 1, 2, 3, 5, 9};
    for (int q = 3; q <= 8; ++q)
        if (c2.t_value({2, q}) != expected[q - 3])
            problems.push_back("t_2(2," + std::to_string(q) + ")");
    for (long long p : {2LL, 3LL, 5LL, 7LL}) {
        ehp::EvalContext ctx(p);
        if (ctx.t_value({3, static_cast<int>(2 * p)}) != 1)
            problems.push_back("t_" + std::to_string(p) + "(3," + std::to_string(2 * p) + ")");
        for (int n = 1; n <= 20; ++n) {
            if (p != 2 && n % 2 == 0)
                continue;
            for (int q = 1; q <= n; ++q)
                if (ctx.t_value({n, q}) != 0)
                    problems.push_back("nonzero at q<=n");
        }
    }
    std::ostringstream os;
    if (problems.empty())
        os << "t_2(2,3..8)=1,1,2,3,5,9; t_p(3,2p)=1; zeros at q<=n";
    else
        for (const auto& problem : problems)
            os << problem << " ";
    return {problems.empty(), os.str()};
}

Outcome criterion_5()
{
    const auto start = Clock::now();
    const auto report = ehp::check_star_grid({2, 3, 5, 7}, 31, 40);
    const double elapsed = seconds_since(start);
    std::ostringstream os;
    os << report.checks_run << " sub-checks in " << std::fixed;
    os.precision(2);
    os << elapsed << " s";
    if (!report.passed())
        os << "; violations: " << joined_violations(report);
    if (elapsed >= 10.0)
        os << "; over the 10 s budget";
    return {report.passed() && elapsed < 10.0, os.str()};
}

Outcome criterion_6()
{
    const auto start = Clock::now();
    std::vector<std::string> problems;
    for (long long p : {2LL, 3LL, 5LL, 7LL}) {
        ehp::EvalContext ctx(p);
        const auto mono = ehp::check_monotonicity(ctx, 40, 60);
        if (!mono.passed())
            problems.push_back("monotonicity: " + joined_violations(mono));
        const auto vanish = ehp::check_vanishing(ctx, 60);
        if (!vanish.passed())
            problems.push_back("vanishing: " + joined_violations(vanish));
    }
    const auto dom = ehp::check_dominance(40);
    if (!dom.passed())
        problems.push_back("dominance: " + joined_violations(dom));
    const double elapsed = seconds_since(start);
    std::ostringstream os;
    if (problems.empty()) {
        os << "monotonicity, vanishing, first-stem value, dominance in " << std::fixed;
        os.precision(2);
        os << elapsed << " s";
    } else {
        for (const auto& problem : problems)
            os << problem << " ";
    }
    if (elapsed >= 10.0)
        os << "; over the 10 s budget";
    return {problems.empty() && elapsed < 10.0, os.str()};
}

int run_cli(const std::string& args)
{
    const std::string cmd = std::string(EHP_CLI_BIN) + " " + args + " >/dev/null 2>/dev/null";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

Outcome criterion_7()
{
    std::vector<std::string> problems;

    const auto records = ehp::load_known(std::string(EHP_DATA_DIR) + "/known_torsion_seed.csv");
    const auto report = ehp::compare_known(records);
    if (!report.all_ok())
        problems.push_back(std::to_string(report.rows_violating) + " negative margins");
    bool anchor_ok = false;
    for (const auto& row : report.rows)
        if (row.rec.p == 2 && row.rec.n == 3 && row.rec.q == 4 && row.bound == "t")
            anchor_ok = row.margin_int == 0;
    if (!anchor_ok)
        problems.push_back("t-margin at (2,3,4,s=1) is not exactly 0");

    // exit-code contract: 0 on clean compare, 1 on impossible row, 2 on junk
    const std::string base = std::string(EHP_DATA_DIR) + "/known_torsion_seed.csv";
    if (run_cli("compare --data " + base) != 0)
        problems.push_back("exit 0 path broken");
    const std::string dir = std::string(EHP_CLI_BIN) + ".acc";
    if (std::system(("mkdir -p " + dir).c_str()) != 0)
        problems.push_back("cannot create scratch dir");
    {
        std::FILE* f = std::fopen((dir + "/impossible.csv").c_str(), "w");
        std::fputs("p,n,q,s,source\n2,3,4,99,synthetic\n", f);
        std::fclose(f);
        if (run_cli("compare --data " + dir + "/impossible.csv") != 1)
            problems.push_back("exit 1 path broken");
    }
    {
        std::FILE* f = std::fopen((dir + "/corrupt.csv").c_str(), "w");
        std::fputs("p,n,q,s,source\n2,3,4,x,junk\n", f);
        std::fclose(f);
        if (run_cli("compare --data " + dir + "/corrupt.csv") != 2)
            problems.push_back("exit 2 path broken");
    }

    std::ostringstream os;
    if (problems.empty())
        os << report.rows.size() << " margins >= 0, anchor margin 0, exit codes 0/1/2";
    else
        for (const auto& problem : problems)
            os << problem << "; ";
    return {problems.empty(), os.str()};
}

const char* kNames[7] = {
    "theorem domination (p in {2,3,5,7}, stems 0..40, n <= 60)",
    "fibonacci floors (H_q >= F_q, t_p(3,2p+j(4p+5)) >= F_{2j+1})",
    "growth constants (q_max=200, window=20)",
    "hand-oracle values",
    "descent-summation checks (odd n in [3,31], q in (n,n+40])",
    "structural inequalities (monotonicity, vanishing, dominance)",
    "data comparison and exit codes",
};

}  // namespace

int main(int argc, char** argv)
{
    int only = 0;
    if (argc > 1)
        only = std::atoi(argv[1]);

    Outcome (*criteria[7])() = {criterion_1, criterion_2, criterion_3, criterion_4,
                                criterion_5, criterion_6, criterion_7};

    int failures = 0;
    for (int i = 0; i < 7; ++i) {
        if (only && only != i + 1)
            continue;
        const Outcome outcome = criteria[i]();
        std::printf("[%s] criterion %d: %s — %s\n", outcome.pass ? "PASS" : "FAIL", i + 1,
                    kNames[i], outcome.detail.c_str());
        if (!outcome.pass)
            ++failures;
    }
    return failures == 0 ? 0 : 1;
}
