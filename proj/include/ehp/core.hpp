#pragma once

#include <cstdint>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "ehp/bound_value.hpp"

namespace ehp {

// Placement of the "+1" special case when p = 2. The recursion for odd p puts
// it at q = p(n-1); at p = 2 the default places it at q = 2n-1, which is the
// placement that reproduces 1,1,2,3,5,9,... for t_2(2,q). The alternatives
// exist for exploration only.
enum class P2Policy {
    SpecialAtQ2nMinus1,  // q == 2n-1 (default)
    SpecialAtQ2nMinus2,  // q == 2n-2
    NoSpecialCase,
};

const char* to_string(P2Policy policy);
P2Policy p2_policy_from_string(std::string_view name);

/// A sphere dimension n and homotopy degree q. The stem q-n may be negative.
struct SphereEntry {
    int n;
    int q;

    SphereEntry(int n_, int q_) : n(n_), q(q_)
    {
        if (n < 1 || q < 1)
            throw domain_error("SphereEntry: n and q must be >= 1 (got n=" +
                               std::to_string(n) + ", q=" + std::to_string(q) + ")");
    }

    int stem() const { return q - n; }
};

/// A prime plus evaluation policy plus memo table; the unit of reproducible
/// computation. Queries are pure functions of (context, entry): two contexts
/// with equal (p, policy) agree on every query, and concurrent queries against
/// one context are safe (the memo is guarded internally).
class EvalContext {
  public:
    explicit EvalContext(long long p, P2Policy policy = P2Policy::SpecialAtQ2nMinus1);

    EvalContext(const EvalContext&) = delete;
    EvalContext& operator=(const EvalContext&) = delete;

    long long prime() const { return p_; }
    P2Policy p2_policy() const { return policy_; }

    /// t_p(n,q): the recursion with the EHP inequalities turned into
    /// equalities. Zero when q <= n or n = 1. For odd p the entry must have
    /// odd n; even spheres go through even_sphere_value.
    BoundValue t_value(const SphereEntry& entry) const;

    /// Value at an even sphere for odd p, via the splitting
    /// t(n-1, q-1) + t(2n-1, q). Rejected at p = 2 (use t_value directly).
    BoundValue even_sphere_value(int n_even, int q) const;

    std::size_t memo_size() const;

    /// Memo contents as (n, q, value), sorted by (n, q).
    std::vector<std::tuple<int, int, BoundValue>> memo_entries() const;

  private:
    BoundValue eval(int n, int q) const;
    bool p2_special(int n, int q) const;

    long long p_;
    P2Policy policy_;
    mutable std::unordered_map<std::uint64_t, BoundValue> memo_;
    mutable std::shared_mutex mutex_;
};

struct StemTable {
    struct Row {
        int n;
        BoundValue value;
        bool via_splitting;
    };

    long long p;
    int stem;
    std::vector<Row> rows;  // sorted by n ascending
};

/// Rows (n, t_p(n, n+k)) for n = 1..n_max, skipping entries with q < 1.
/// For odd p, even-n rows are computed through the splitting and flagged.
StemTable stem_table(const EvalContext& ctx, int stem, int n_max);

/// H_j = t_2(2, j+2) for j = 1..q_max, default p = 2 policy.
std::vector<BoundValue> h_sequence(int q_max);

}  // namespace ehp
