#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace ehp {

// Exact integer of unbounded magnitude. Values produced by the recursion and
// the bound catalog are always nonnegative; signed arithmetic is still allowed
// so that margins (bound - s) can go negative.
using BoundValue = boost::multiprecision::cpp_int;

// Exact rational, used for bound exponents like (q-n+3-2p)/(p-1).
using Rational = boost::multiprecision::cpp_rational;

struct domain_error : std::invalid_argument {
    explicit domain_error(const std::string& what) : std::invalid_argument(what) {}
};

struct parity_error : std::invalid_argument {
    explicit parity_error(const std::string& what) : std::invalid_argument(what) {}
};

// Floor division for b > 0 (a may be negative).
constexpr long long floor_div(long long a, long long b)
{
    long long d = a / b;
    if (a % b != 0 && (a < 0) != (b < 0))
        --d;
    return d;
}

// 2^e for e >= 0.
inline BoundValue pow2(long long e)
{
    if (e < 0)
        throw domain_error("pow2: negative exponent");
    return BoundValue(1) << static_cast<unsigned>(e);
}

// 2^e for e >= 0, 0 for e < 0. This is the integer-bound convention used
// throughout: a power of two floored away entirely once the exponent drops
// below zero.
inline BoundValue pow2_floored(long long e)
{
    return e < 0 ? BoundValue(0) : pow2(e);
}

bool is_prime(long long v);

}  // namespace ehp
