#pragma once

#include <vector>

#include "ehp/bound_value.hpp"
#include "ehp/core.hpp"
#include "ehp/report.hpp"

namespace ehp {

// Grid suites run their cells either in a plain loop or under OpenMP. Both
// modes produce identical reports; the serial path is the reference the
// parallel one is tested against.
enum class ExecMode { Serial, Parallel };

/// t(n,q) <= strong bound over all cells with stem 0..stem_max, n <= n_max.
/// For odd p the even-n cells check the splitting value against the sum of
/// the two odd-entry strong bounds instead.
VerificationReport check_theorem(const EvalContext& ctx, int stem_max, int n_max,
                                 ExecMode mode = ExecMode::Parallel);

/// Intermediate quantities of the stem-descent summation at one (p, n, q).
struct StarBreakdown {
    long long p = 0;
    int n = 0;
    int q = 0;
    BoundValue t;                            // t_p(n,q)
    BoundValue two_term_sum;                 // 1 + paired descent sum
    BoundValue merged_sum;                   // 1 + single merged sum
    std::vector<long long> merged_exponents; // floored exponent at i = 0..n-2
    long long top_floor = 0;                 // floor((q-n+3-2p)/(p-1))
};

StarBreakdown star_breakdown(const EvalContext& ctx, int n, int q);

/// The five descent-summation checks at one cell: t <= two-term sum, two-term
/// <= merged, surviving exponents pairwise distinct, the i = n-2 exponent
/// equals top_floor - 1, and the closure: merged <= 2^top_floor when
/// top_floor >= 0, and merged == 1 (an empty summation) otherwise.
VerificationReport check_star(long long p, int n, int q);

/// check_star over odd n in [3, n_max], q in (n, n+stem_max], one report.
VerificationReport check_star_grid(const std::vector<long long>& primes, int n_max,
                                   int stem_max, ExecMode mode = ExecMode::Parallel);

/// t(3, 2p+j(4p+5)) >= F_{2j+1} for j = 0..j_max, plus the odd-n extension
/// t(n, 2p+j(4p+5)+n-3) >= F_{2j+1} for n in {5, 7}.
VerificationReport check_fibonacci_lower(long long p, int j_max);

/// t(n-2, q-2) <= t(n, q) over the grid (n >= 3, valid parity).
VerificationReport check_monotonicity(const EvalContext& ctx, int stem_max, int n_max,
                                      ExecMode mode = ExecMode::Parallel);

/// t = 0 on stems 1..2p-4 and t = 1 at stem 2p-3, odd n in [3, n_max].
VerificationReport check_vanishing(const EvalContext& ctx, int n_max);

/// Exact rational-exponent comparison (k+3-2p)/(p-1) <= k+1 over stems
/// 0..stem_max: the stem-exponential bound never exceeds 2^{q-n+1}.
VerificationReport check_dominance(int stem_max,
                                   const std::vector<long long>& primes = {2, 3, 5, 7});

}  // namespace ehp
