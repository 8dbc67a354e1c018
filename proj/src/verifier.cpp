#include "ehp/verifier.hpp"

#include <functional>
#include <set>
#include <sstream>

#include "ehp/bounds.hpp"

#ifdef _OPENMP
#include <omp.h>
#else
static int omp_get_max_threads() { return 1; }
static int omp_get_thread_num() { return 0; }
#endif

namespace ehp {

namespace {

std::string dec(const BoundValue& v)
{
    std::ostringstream os;
    os << v;
    return os.str();
}

// Runs fn(cell_index, sink) for every index in [0, count), collecting
// violations into per-thread buffers under OpenMP, then merges and sorts.
// The memoized recursion is a sequential dependency chain, so the parallel
// mode first drives it through `warm` in one serial pass; the per-cell check
// arithmetic then runs against a read-mostly memo.
void run_cells(std::size_t count, ExecMode mode, VerificationReport& report,
               const std::function<void(std::size_t, std::vector<Violation>&)>& fn,
               const std::function<void(std::size_t)>& warm = nullptr)
{
    if (mode == ExecMode::Serial) {
        for (std::size_t i = 0; i < count; ++i)
            fn(i, report.violations);
    } else {
        if (warm)
            for (std::size_t i = 0; i < count; ++i)
                warm(i);
        std::vector<std::vector<Violation>> buffers(omp_get_max_threads());
#pragma omp parallel for schedule(static)
        for (long long i = 0; i < static_cast<long long>(count); ++i)
            fn(static_cast<std::size_t>(i), buffers[omp_get_thread_num()]);
        for (auto& buffer : buffers)
            report.violations.insert(report.violations.end(), buffer.begin(), buffer.end());
    }
    report.sort_violations();
}

struct Cell {
    int n;
    int q;
};

std::vector<Cell> grid_cells(long long p, int stem_max, int n_max, bool include_even,
                             int n_min = 1)
{
    std::vector<Cell> cells;
    for (int k = 0; k <= stem_max; ++k)
        for (int n = n_min; n <= n_max; ++n) {
            if (!include_even && p != 2 && n % 2 == 0)
                continue;
            cells.push_back({n, n + k});
        }
    return cells;
}

}  // namespace

VerificationReport check_theorem(const EvalContext& ctx, int stem_max, int n_max, ExecMode mode)
{
    const long long p = ctx.prime();
    VerificationReport report;
    report.suite = "theorem";
    {
        std::ostringstream os;
        os << "p=" << p << " policy=" << to_string(ctx.p2_policy()) << " stem=0.." << stem_max
           << " n=1.." << n_max;
        report.ranges = os.str();
    }

    const auto cells = grid_cells(p, stem_max, n_max, /*include_even=*/true);
    report.checks_run = cells.size();
    auto value_at = [&](int n, int q) {
        return p == 2 || n % 2 == 1 ? ctx.t_value({n, q}) : ctx.even_sphere_value(n, q);
    };
    run_cells(
        cells.size(), mode, report,
        [&](std::size_t i, std::vector<Violation>& sink) {
            const auto [n, q] = cells[i];
            if (p == 2 || n % 2 == 1) {
                const BoundValue t = ctx.t_value({n, q});
                const BoundValue bound = main_bound(p, n, q).strong;
                if (t > bound)
                    sink.push_back({p, n, q, "t<=strong", dec(t), dec(bound)});
            } else {
                // Even sphere at odd p: splitting value against the two odd
                // strong bounds it decomposes into.
                const BoundValue t = ctx.even_sphere_value(n, q);
                BoundValue bound = main_bound(p, 2 * n - 1, q).strong;
                if (q >= 2)
                    bound += main_bound(p, n - 1, q - 1).strong;
                if (t > bound)
                    sink.push_back({p, n, q, "split<=strong-sum", dec(t), dec(bound)});
            }
        },
        [&](std::size_t i) { value_at(cells[i].n, cells[i].q); });
    return report;
}

StarBreakdown star_breakdown(const EvalContext& ctx, int n, int q)
{
    const long long p = ctx.prime();
    if (n % 2 == 0)
        throw parity_error("star_breakdown: n must be odd");
    if (n < 3 || q <= n)
        throw domain_error("star_breakdown: need n >= 3 and q > n");

    StarBreakdown out;
    out.p = p;
    out.n = n;
    out.q = q;
    out.t = ctx.t_value({n, q});
    out.top_floor = floor_div(static_cast<long long>(q) - n + 3 - 2 * p, p - 1);

    out.two_term_sum = 1;
    for (int i = 0; i <= (n - 3) / 2; ++i) {
        const long long mid = p * (n - 2LL * i - 1);
        const long long ea = floor_div(q - 2LL * i - (mid + 1) + 3 - 2 * p, p - 1);
        const long long eb = floor_div(q - 2LL * i - 1 - (mid - 1) + 3 - 2 * p, p - 1);
        out.two_term_sum += pow2_floored(ea) + pow2_floored(eb);
    }

    out.merged_sum = 1;
    out.merged_exponents.reserve(n - 1);
    for (int i = 0; i <= n - 2; ++i) {
        const long long e =
            floor_div(q - static_cast<long long>(i) - (p * (n - i - 1LL) + 1) + 3 - 2 * p, p - 1);
        out.merged_exponents.push_back(e);
        out.merged_sum += pow2_floored(e);
    }
    return out;
}

namespace {

void star_relations(const StarBreakdown& s, std::vector<Violation>& sink)
{
    const long long p = s.p;
    const int n = s.n;
    const int q = s.q;

    if (s.t > s.two_term_sum)
        sink.push_back({p, n, q, "t<=two-term", dec(s.t), dec(s.two_term_sum)});
    if (s.two_term_sum > s.merged_sum)
        sink.push_back({p, n, q, "two-term<=merged", dec(s.two_term_sum), dec(s.merged_sum)});

    std::set<long long> surviving;
    std::size_t count = 0;
    for (long long e : s.merged_exponents)
        if (e >= 0) {
            surviving.insert(e);
            ++count;
        }
    if (surviving.size() != count)
        sink.push_back({p, n, q, "exponents-distinct", std::to_string(surviving.size()),
                        std::to_string(count)});

    const long long top = s.merged_exponents.back();
    if (top != s.top_floor - 1)
        sink.push_back({p, n, q, "top-exponent", std::to_string(top),
                        std::to_string(s.top_floor - 1)});

    // Closure: the surviving powers are distinct with exponents <= top_floor-1,
    // so their sum stays below 2^top_floor. With top_floor < 0 nothing
    // survives and the sum collapses to the bare 1.
    if (s.top_floor >= 0) {
        const BoundValue cap = pow2(s.top_floor);
        if (s.merged_sum > cap)
            sink.push_back({p, n, q, "merged<=2^top", dec(s.merged_sum), dec(cap)});
    } else if (s.merged_sum != 1) {
        sink.push_back({p, n, q, "merged-empty", dec(s.merged_sum), "1"});
    }
}

}  // namespace

VerificationReport check_star(long long p, int n, int q)
{
    EvalContext ctx(p);
    VerificationReport report;
    report.suite = "star";
    {
        std::ostringstream os;
        os << "p=" << p << " n=" << n << " q=" << q;
        report.ranges = os.str();
    }
    report.checks_run = 5;
    star_relations(star_breakdown(ctx, n, q), report.violations);
    report.sort_violations();
    return report;
}

VerificationReport check_star_grid(const std::vector<long long>& primes, int n_max, int stem_max,
                                   ExecMode mode)
{
    VerificationReport report;
    report.suite = "star";
    {
        std::ostringstream os;
        os << "p={";
        for (std::size_t i = 0; i < primes.size(); ++i)
            os << (i ? "," : "") << primes[i];
        os << "} n-odd=3.." << n_max << " stem=1.." << stem_max;
        report.ranges = os.str();
    }

    struct GridCell {
        std::size_t prime_index;
        int n;
        int q;
    };
    std::vector<GridCell> cells;
    std::vector<std::unique_ptr<EvalContext>> contexts;
    for (std::size_t pi = 0; pi < primes.size(); ++pi) {
        contexts.push_back(std::make_unique<EvalContext>(primes[pi]));
        for (int n = 3; n <= n_max; n += 2)
            for (int k = 1; k <= stem_max; ++k)
                cells.push_back({pi, n, n + k});
    }
    report.checks_run = cells.size() * 5;
    if (mode == ExecMode::Parallel) {
        // The contexts are independent, so the serial DP floor shrinks to the
        // most expensive prime.
#pragma omp parallel for schedule(dynamic, 1)
        for (long long pi = 0; pi < static_cast<long long>(primes.size()); ++pi)
            for (int n = 3; n <= n_max; n += 2)
                for (int k = 1; k <= stem_max; ++k)
                    contexts[pi]->t_value({n, n + k});
    }
    run_cells(cells.size(), mode, report, [&](std::size_t i, std::vector<Violation>& sink) {
        const auto& cell = cells[i];
        star_relations(star_breakdown(*contexts[cell.prime_index], cell.n, cell.q), sink);
    });
    return report;
}

VerificationReport check_fibonacci_lower(long long p, int j_max)
{
    if (j_max < 0)
        throw domain_error("check_fibonacci_lower: j_max must be >= 0");
    EvalContext ctx(p);
    VerificationReport report;
    report.suite = "fibonacci";
    {
        std::ostringstream os;
        os << "p=" << p << " j=0.." << j_max << " n={3,5,7}";
        report.ranges = os.str();
    }
    for (int j = 0; j <= j_max; ++j) {
        const BoundValue floor = fibonacci(2 * j + 1);
        for (int n : {3, 5, 7}) {
            const long long q = 2 * p + static_cast<long long>(j) * (4 * p + 5) + n - 3;
            const BoundValue t = ctx.t_value({n, static_cast<int>(q)});
            ++report.checks_run;
            if (t < floor) {
                std::ostringstream rel;
                rel << "t>=F_" << 2 * j + 1;
                report.violations.push_back(
                    {p, n, static_cast<int>(q), rel.str(), dec(t), dec(floor)});
            }
        }
    }
    report.sort_violations();
    return report;
}

VerificationReport check_monotonicity(const EvalContext& ctx, int stem_max, int n_max,
                                      ExecMode mode)
{
    const long long p = ctx.prime();
    VerificationReport report;
    report.suite = "monotonicity";
    {
        std::ostringstream os;
        os << "p=" << p << " stem=0.." << stem_max << " n=3.." << n_max;
        report.ranges = os.str();
    }
    const auto cells = grid_cells(p, stem_max, n_max, /*include_even=*/false, /*n_min=*/3);
    report.checks_run = cells.size();
    run_cells(
        cells.size(), mode, report,
        [&](std::size_t i, std::vector<Violation>& sink) {
            const auto [n, q] = cells[i];
            if (q - 2 < 1)
                return;
            const BoundValue lower = ctx.t_value({n - 2, q - 2});
            const BoundValue upper = ctx.t_value({n, q});
            if (lower > upper)
                sink.push_back({p, n, q, "t(n-2,q-2)<=t(n,q)", dec(lower), dec(upper)});
        },
        [&](std::size_t i) {
            const auto [n, q] = cells[i];
            if (q - 2 >= 1)
                ctx.t_value({n, q});
        });
    return report;
}

VerificationReport check_vanishing(const EvalContext& ctx, int n_max)
{
    const long long p = ctx.prime();
    VerificationReport report;
    report.suite = "vanishing";
    {
        std::ostringstream os;
        os << "p=" << p << " n-odd=3.." << n_max << " stem=1.." << 2 * p - 3;
        report.ranges = os.str();
    }
    for (int n = 3; n <= n_max; n += 2) {
        for (long long k = 1; k < 2 * p - 3; ++k) {
            const BoundValue t = ctx.t_value({n, n + static_cast<int>(k)});
            ++report.checks_run;
            if (t != 0)
                report.violations.push_back(
                    {p, n, n + static_cast<int>(k), "t=0-below-first-stem", dec(t), "0"});
        }
        const int q = n + static_cast<int>(2 * p - 3);
        const BoundValue t = ctx.t_value({n, q});
        ++report.checks_run;
        if (t != 1)
            report.violations.push_back({p, n, q, "t=1-at-first-stem", dec(t), "1"});
    }
    report.sort_violations();
    return report;
}

VerificationReport check_dominance(int stem_max, const std::vector<long long>& primes)
{
    VerificationReport report;
    report.suite = "dominance";
    {
        std::ostringstream os;
        os << "p={";
        for (std::size_t i = 0; i < primes.size(); ++i)
            os << (i ? "," : "") << primes[i];
        os << "} stem=0.." << stem_max;
        report.ranges = os.str();
    }
    for (long long p : primes) {
        if (!is_prime(p))
            throw domain_error("check_dominance: p must be prime");
        for (int k = 0; k <= stem_max; ++k) {
            // Exact rational exponents; both bounds have base 2.
            const Rational lhs(static_cast<long long>(k) + 3 - 2 * p, p - 1);
            const Rational rhs(k + 1);
            ++report.checks_run;
            if (lhs > rhs) {
                std::ostringstream ls, rs;
                ls << lhs;
                rs << rhs;
                report.violations.push_back({p, 0, k, "main-exp<=henn-exp", ls.str(), rs.str()});
            }
        }
    }
    report.sort_violations();
    return report;
}

}  // namespace ehp
