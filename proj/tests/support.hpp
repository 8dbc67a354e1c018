#pragma once

// Test-only helpers: an unmemoized direct evaluation of the recursion (kept
// independent of EvalContext so the two can cross-check each other on small
// inputs) and values frozen from hand expansion.

#include <cstdint>
#include <set>
#include <utility>

#include "ehp/bound_value.hpp"
#include "ehp/core.hpp"

namespace ehp::testing {

inline BoundValue direct_t(long long p, int n, int q,
                           P2Policy policy = P2Policy::SpecialAtQ2nMinus1)
{
    if (q <= n || n == 1)
        return 0;
    if (p == 2) {
        const bool special = policy == P2Policy::SpecialAtQ2nMinus1 ? q == 2 * n - 1
                             : policy == P2Policy::SpecialAtQ2nMinus2 ? q == 2 * n - 2
                                                                      : false;
        if (special)
            return 1 + direct_t(p, n - 1, q - 1, policy);
        return direct_t(p, 2 * n - 1, q, policy) + direct_t(p, n - 1, q - 1, policy);
    }
    const long long e = p * (n - 1);
    if (q == e)
        return 1 + direct_t(p, n - 2, q - 2, policy);
    return direct_t(p, static_cast<int>(e) + 1, q, policy) +
           direct_t(p, static_cast<int>(e) - 1, q - 1, policy) +
           direct_t(p, n - 2, q - 2, policy);
}

// Walks one unmemoized expansion keeping the set of keys on the current
// dependency chain; returns false if a key ever repeats along a chain (which
// would mean a cycle, i.e. non-termination without memoization).
inline bool acyclic_expansion(long long p, int n, int q, std::set<std::uint64_t>& on_chain)
{
    if (q <= n || n == 1)
        return true;
    const std::uint64_t key =
        (static_cast<std::uint64_t>(static_cast<std::uint32_t>(n)) << 32) |
        static_cast<std::uint32_t>(q);
    if (!on_chain.insert(key).second)
        return false;
    bool ok = true;
    if (p == 2) {
        if (q == 2 * n - 1)
            ok = acyclic_expansion(p, n - 1, q - 1, on_chain);
        else
            ok = acyclic_expansion(p, 2 * n - 1, q, on_chain) &&
                 acyclic_expansion(p, n - 1, q - 1, on_chain);
    } else {
        const int e = static_cast<int>(p * (n - 1));
        if (q == e)
            ok = acyclic_expansion(p, n - 2, q - 2, on_chain);
        else
            ok = acyclic_expansion(p, e + 1, q, on_chain) &&
                 acyclic_expansion(p, e - 1, q - 1, on_chain) &&
                 acyclic_expansion(p, n - 2, q - 2, on_chain);
    }
    on_chain.erase(key);
    return ok;
}

// t_2(2, q) for q = 3..8, i.e. H_1..H_6, from hand expansion.
inline constexpr int kHandH[6] = {1, 1, 2, 3, 5, 9};

}  // namespace ehp::testing
