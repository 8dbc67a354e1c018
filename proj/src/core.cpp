#include "ehp/core.hpp"

#include <algorithm>
#include <mutex>

namespace ehp {

bool is_prime(long long v)
{
    if (v < 2)
        return false;
    if (v % 2 == 0)
        return v == 2;
    for (long long d = 3; d * d <= v; d += 2)
        if (v % d == 0)
            return false;
    return true;
}

const char* to_string(P2Policy policy)
{
    switch (policy) {
        case P2Policy::SpecialAtQ2nMinus1: return "q2n1";
        case P2Policy::SpecialAtQ2nMinus2: return "q2n2";
        case P2Policy::NoSpecialCase: return "none";
    }
    return "?";
}

P2Policy p2_policy_from_string(std::string_view name)
{
    if (name == "q2n1")
        return P2Policy::SpecialAtQ2nMinus1;
    if (name == "q2n2")
        return P2Policy::SpecialAtQ2nMinus2;
    if (name == "none")
        return P2Policy::NoSpecialCase;
    throw domain_error("unknown p2 policy: " + std::string(name));
}

namespace {

std::uint64_t pack_key(int n, int q)
{
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(n)) << 32) |
           static_cast<std::uint32_t>(q);
}

}  // namespace

EvalContext::EvalContext(long long p, P2Policy policy) : p_(p), policy_(policy)
{
    if (!is_prime(p))
        throw domain_error("EvalContext: p must be prime (got " + std::to_string(p) + ")");
}

bool EvalContext::p2_special(int n, int q) const
{
    switch (policy_) {
        case P2Policy::SpecialAtQ2nMinus1: return q == 2 * n - 1;
        case P2Policy::SpecialAtQ2nMinus2: return q == 2 * n - 2;
        case P2Policy::NoSpecialCase: return false;
    }
    return false;
}

BoundValue EvalContext::eval(int n, int q) const
{
    if (q <= n || n == 1)
        return 0;

    const std::uint64_t key = pack_key(n, q);
    {
        std::shared_lock lock(mutex_);
        auto it = memo_.find(key);
        if (it != memo_.end())
            return it->second;
    }

    // No lock is held across the recursive calls; a concurrent duplicate
    // computation lands on the same value.
    BoundValue v;
    if (p_ == 2) {
        if (p2_special(n, q))
            v = 1 + eval(n - 1, q - 1);
        else
            v = eval(2 * n - 1, q) + eval(n - 1, q - 1);
    } else {
        const long long e = p_ * (n - 1);
        if (q == e)
            v = 1 + eval(n - 2, q - 2);
        else
            v = eval(static_cast<int>(e) + 1, q) + eval(static_cast<int>(e) - 1, q - 1) +
                eval(n - 2, q - 2);
    }

    std::unique_lock lock(mutex_);
    return memo_.emplace(key, std::move(v)).first->second;
}

BoundValue EvalContext::t_value(const SphereEntry& entry) const
{
    if (p_ != 2 && entry.n % 2 == 0)
        throw parity_error("t_value: even n=" + std::to_string(entry.n) + " at odd p=" +
                           std::to_string(p_) + " (use even_sphere_value)");
    return eval(entry.n, entry.q);
}

BoundValue EvalContext::even_sphere_value(int n_even, int q) const
{
    if (p_ == 2)
        throw domain_error("even_sphere_value: p = 2 entries go through t_value");
    if (n_even % 2 != 0)
        throw parity_error("even_sphere_value: n=" + std::to_string(n_even) + " is odd");
    if (n_even < 2 || q < 1)
        throw domain_error("even_sphere_value: need n_even >= 2 and q >= 1");
    BoundValue low = q >= 2 ? eval(n_even - 1, q - 1) : BoundValue(0);
    return low + eval(2 * n_even - 1, q);
}

std::size_t EvalContext::memo_size() const
{
    std::shared_lock lock(mutex_);
    return memo_.size();
}

std::vector<std::tuple<int, int, BoundValue>> EvalContext::memo_entries() const
{
    std::vector<std::tuple<int, int, BoundValue>> out;
    {
        std::shared_lock lock(mutex_);
        out.reserve(memo_.size());
        for (const auto& [key, value] : memo_)
            out.emplace_back(static_cast<int>(key >> 32), static_cast<int>(key & 0xffffffffu),
                             value);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return std::tie(std::get<0>(a), std::get<1>(a)) < std::tie(std::get<0>(b), std::get<1>(b));
    });
    return out;
}

StemTable stem_table(const EvalContext& ctx, int stem, int n_max)
{
    if (n_max < 1)
        throw domain_error("stem_table: n_max must be >= 1");
    StemTable table{ctx.prime(), stem, {}};
    for (int n = 1; n <= n_max; ++n) {
        const long long q = static_cast<long long>(n) + stem;
        if (q < 1) {
            // Out of the recursion's domain; trivially zero, never evaluated.
            table.rows.push_back({n, BoundValue(0), false});
            continue;
        }
        if (ctx.prime() != 2 && n % 2 == 0)
            table.rows.push_back({n, ctx.even_sphere_value(n, static_cast<int>(q)), true});
        else
            table.rows.push_back({n, ctx.t_value({n, static_cast<int>(q)}), false});
    }
    return table;
}

std::vector<BoundValue> h_sequence(int q_max)
{
    if (q_max < 1)
        throw domain_error("h_sequence: q_max must be >= 1");
    EvalContext ctx(2);
    std::vector<BoundValue> h;
    h.reserve(q_max);
    for (int j = 1; j <= q_max; ++j)
        h.push_back(ctx.t_value({2, j + 2}));
    return h;
}

}  // namespace ehp
