// Command-line surface for the bound recursion, the bound catalog, the grid
// verifier, growth estimation, and known-data comparison.
//
// Exit codes: 0 success, 1 mathematical-content violation found, 2 usage or
// input error. Diagnostics go to stderr; stdout carries data only.

#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ehp/asymptotics.hpp"
#include "ehp/bounds.hpp"
#include "ehp/core.hpp"
#include "ehp/known_data.hpp"
#include "ehp/render.hpp"
#include "ehp/verifier.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

struct CommonOptions {
    std::string format = "csv";
    std::string p2_special = "q2n1";
};

std::vector<long long> parse_prime_list(const std::string& text)
{
    std::vector<long long> primes;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty())
            continue;
        std::size_t pos = 0;
        const long long p = std::stoll(item, &pos);
        if (pos != item.size())
            throw ehp::domain_error("bad prime list entry: '" + item + "'");
        if (!ehp::is_prime(p))
            throw ehp::domain_error("prime list entry is not prime: " + item);
        primes.push_back(p);
    }
    if (primes.empty())
        throw ehp::domain_error("prime list is empty");
    return primes;
}

void write_memo_cache(const ehp::EvalContext& ctx, const std::string& path)
{
    nlohmann::ordered_json j;
    j["version"] = 1;
    j["p"] = ctx.prime();
    j["policy"] = ehp::to_string(ctx.p2_policy());
    j["entries"] = nlohmann::ordered_json::array();
    for (const auto& [n, q, value] : ctx.memo_entries()) {
        std::ostringstream os;
        os << value;
        j["entries"].push_back({n, q, os.str()});
    }
    std::ofstream out(path);
    if (!out)
        throw ehp::domain_error("cannot write cache file: " + path);
    out << j.dump(2) << "\n";
}

int run(int argc, char** argv)
{
    CLI::App app{"exact EHP-derived bounds on p-torsion of homotopy groups of spheres"};
    app.require_subcommand(1);

    CommonOptions common;

    // value
    auto* value_cmd = app.add_subcommand("value", "t_p(n,q), or the splitting value at even n");
    long long value_p = 2;
    int value_n = 2, value_q = 2;
    std::string value_cache;
    value_cmd->add_option("--prime", value_p, "prime p")->required();
    value_cmd->add_option("--n", value_n, "sphere dimension")->required();
    value_cmd->add_option("--q", value_q, "homotopy degree")->required();
    value_cmd->add_option("--p2-special", common.p2_special, "p=2 special-case placement")
        ->check(CLI::IsMember({"q2n1", "q2n2", "none"}));
    value_cmd->add_option("--cache", value_cache, "write the memo as versioned JSON");

    // table
    auto* table_cmd = app.add_subcommand("table", "one stem of t values");
    long long table_p = 2;
    int table_stem = 0, table_n_max = 20;
    std::string table_cache;
    table_cmd->add_option("--prime", table_p, "prime p")->required();
    table_cmd->add_option("--stem", table_stem, "stem index k (q = n+k)")->required();
    table_cmd->add_option("--n-max", table_n_max, "largest n");
    table_cmd->add_option("--p2-special", common.p2_special, "p=2 special-case placement")
        ->check(CLI::IsMember({"q2n1", "q2n2", "none"}));
    table_cmd->add_option("--format", common.format, "csv|json|md")
        ->check(CLI::IsMember({"csv", "json", "md"}));
    table_cmd->add_option("--cache", table_cache, "write the memo as versioned JSON");

    // sequence
    auto* seq_cmd = app.add_subcommand("sequence", "H_j = t_2(2, j+2) for j = 1..q_max");
    int seq_q_max = 40;
    seq_cmd->add_option("--q-max", seq_q_max, "number of terms");
    seq_cmd->add_option("--p2-special", common.p2_special, "p=2 special-case placement")
        ->check(CLI::IsMember({"q2n1", "q2n2", "none"}));
    seq_cmd->add_option("--format", common.format, "csv|json|md")
        ->check(CLI::IsMember({"csv", "json", "md"}));

    // bounds
    auto* bounds_cmd = app.add_subcommand("bounds", "every bound family at one (p,n,q)");
    long long bounds_p = 2;
    int bounds_n = 3, bounds_q = 4;
    bounds_cmd->add_option("--prime", bounds_p, "prime p")->required();
    bounds_cmd->add_option("--n", bounds_n, "sphere dimension")->required();
    bounds_cmd->add_option("--q", bounds_q, "homotopy degree")->required();
    bounds_cmd->add_option("--format", common.format, "csv|json|md")
        ->check(CLI::IsMember({"csv", "json", "md"}));

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run inequality suites over grids");
    std::string verify_suite = "all";
    std::string verify_primes = "2,3,5,7";
    int verify_stem_max = 40, verify_n_max = 60, verify_j_max = 6;
    std::string verify_exec = "parallel";
    verify_cmd->add_option("--suite", verify_suite, "suite name or 'all'")
        ->check(CLI::IsMember({"theorem", "star", "fibonacci", "monotonicity", "vanishing",
                               "dominance", "golden-floor", "all"}));
    verify_cmd->add_option("--prime-list", verify_primes, "comma-separated primes");
    verify_cmd->add_option("--stem-max", verify_stem_max, "largest stem");
    verify_cmd->add_option("--n-max", verify_n_max, "largest n");
    verify_cmd->add_option("--j-max", verify_j_max, "largest j for the fibonacci suite");
    verify_cmd->add_option("--p2-special", common.p2_special, "p=2 special-case placement")
        ->check(CLI::IsMember({"q2n1", "q2n2", "none"}));
    verify_cmd->add_option("--exec", verify_exec, "serial|parallel")
        ->check(CLI::IsMember({"serial", "parallel"}));
    verify_cmd->add_option("--format", common.format, "csv|json|md")
        ->check(CLI::IsMember({"csv", "json", "md"}));

    // estimate
    auto* est_cmd = app.add_subcommand("estimate", "growth constants of the H sequence");
    int est_q_max = 200, est_window = 20;
    std::string est_method = "geometric-window";
    est_cmd->add_option("--q-max", est_q_max, "sequence length");
    est_cmd->add_option("--window", est_window, "estimation window");
    est_cmd->add_option("--method", est_method, "estimation method")
        ->check(CLI::IsMember({"ratio", "geometric-window", "log-linear-fit"}));
    est_cmd->add_option("--format", common.format, "csv|json|md")
        ->check(CLI::IsMember({"csv", "json", "md"}));

    // compare
    auto* cmp_cmd = app.add_subcommand("compare", "bound margins against known torsion data");
    std::string cmp_data;
    cmp_cmd->add_option("--data", cmp_data, "CSV file: p,n,q,s,source")->required();
    cmp_cmd->add_option("--p2-special", common.p2_special, "p=2 special-case placement")
        ->check(CLI::IsMember({"q2n1", "q2n2", "none"}));
    cmp_cmd->add_option("--format", common.format, "csv|json|md")
        ->check(CLI::IsMember({"csv", "json", "md"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        std::cout << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }

    const ehp::Format format = ehp::format_from_string(common.format);
    const ehp::P2Policy policy = ehp::p2_policy_from_string(common.p2_special);

    if (value_cmd->parsed()) {
        ehp::EvalContext ctx(value_p, policy);
        ehp::BoundValue v;
        if (value_p != 2 && value_n % 2 == 0)
            v = ctx.even_sphere_value(value_n, value_q);
        else
            v = ctx.t_value({value_n, value_q});
        std::cout << ehp::render_value(v);
        if (!value_cache.empty())
            write_memo_cache(ctx, value_cache);
        return kExitOk;
    }

    if (table_cmd->parsed()) {
        ehp::EvalContext ctx(table_p, policy);
        const ehp::StemTable table = ehp::stem_table(ctx, table_stem, table_n_max);
        std::cout << ehp::render_stem_table(table, format);
        if (!table_cache.empty())
            write_memo_cache(ctx, table_cache);
        return kExitOk;
    }

    if (seq_cmd->parsed()) {
        if (policy == ehp::P2Policy::SpecialAtQ2nMinus1) {
            std::cout << ehp::render_sequence(ehp::h_sequence(seq_q_max), format);
        } else {
            // Same extraction under an alternative placement, for exploration.
            ehp::EvalContext ctx(2, policy);
            std::vector<ehp::BoundValue> h;
            for (int j = 1; j <= seq_q_max; ++j)
                h.push_back(ctx.t_value({2, j + 2}));
            std::cout << ehp::render_sequence(h, format);
        }
        return kExitOk;
    }

    if (bounds_cmd->parsed()) {
        std::cout << ehp::render_bounds(ehp::bounds_rows(bounds_p, bounds_n, bounds_q), format);
        return kExitOk;
    }

    if (verify_cmd->parsed()) {
        const auto primes = parse_prime_list(verify_primes);
        const ehp::ExecMode mode =
            verify_exec == "serial" ? ehp::ExecMode::Serial : ehp::ExecMode::Parallel;
        const bool all = verify_suite == "all";
        std::vector<ehp::VerificationReport> reports;

        std::map<long long, std::unique_ptr<ehp::EvalContext>> contexts;
        auto ctx_for = [&](long long p) -> ehp::EvalContext& {
            auto& ptr = contexts[p];
            if (!ptr)
                ptr = std::make_unique<ehp::EvalContext>(p, policy);
            return *ptr;
        };

        if (all || verify_suite == "theorem")
            for (long long p : primes)
                reports.push_back(ehp::check_theorem(ctx_for(p), verify_stem_max, verify_n_max, mode));
        if (all || verify_suite == "star")
            reports.push_back(ehp::check_star_grid(primes, std::min(verify_n_max, 31),
                                                   verify_stem_max, mode));
        if (all || verify_suite == "fibonacci")
            for (long long p : primes)
                reports.push_back(ehp::check_fibonacci_lower(p, verify_j_max));
        if (all || verify_suite == "monotonicity")
            for (long long p : primes)
                reports.push_back(
                    ehp::check_monotonicity(ctx_for(p), verify_stem_max, verify_n_max, mode));
        if (all || verify_suite == "vanishing")
            for (long long p : primes)
                reports.push_back(ehp::check_vanishing(ctx_for(p), verify_n_max));
        if (all || verify_suite == "dominance")
            reports.push_back(ehp::check_dominance(verify_stem_max, primes));
        if (all || verify_suite == "golden-floor")
            reports.push_back(ehp::golden_floor_check(100));

        std::cout << ehp::render_reports(reports, format);
        for (const auto& report : reports)
            if (!report.passed())
                return kExitViolation;
        return kExitOk;
    }

    if (est_cmd->parsed()) {
        const ehp::GrowthEstimate estimate = ehp::estimate_growth(
            est_q_max, est_window, ehp::growth_method_from_string(est_method));
        std::cout << ehp::render_estimate(estimate, format);
        return kExitOk;
    }

    if (cmp_cmd->parsed()) {
        const auto records = ehp::load_known(cmp_data);
        const ehp::ComparisonReport report = ehp::compare_known(records, policy);
        std::cout << ehp::render_comparison(report, format);
        return report.all_ok() ? kExitOk : kExitViolation;
    }

    return kExitUsage;
}

}  // namespace

int main(int argc, char** argv)
{
    try {
        return run(argc, argv);
    } catch (const ehp::parse_error& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }
}
