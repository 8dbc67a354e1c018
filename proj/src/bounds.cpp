#include "ehp/bounds.hpp"

#include <cmath>
#include <sstream>

namespace ehp {

long double ExpForm::log_value() const
{
    return exponent.convert_to<long double>() * std::log(static_cast<long double>(base));
}

long double ExpForm::value() const
{
    return std::exp(log_value());
}

std::string ExpForm::exponent_string() const
{
    std::ostringstream os;
    os << exponent;
    return os.str();
}

ExpCmp compare(const ExpForm& a, const ExpForm& b, double rel_tol)
{
    const long double la = a.log_value();
    const long double lb = b.log_value();
    const long double scale = std::max({std::fabs(la), std::fabs(lb), 1.0L});
    if (std::fabs(la - lb) <= rel_tol * scale)
        return ExpCmp::Indistinguishable;
    return la < lb ? ExpCmp::Less : ExpCmp::Greater;
}

const char* to_string(ExpCmp cmp)
{
    switch (cmp) {
        case ExpCmp::Less: return "less";
        case ExpCmp::Indistinguishable: return "indistinguishable";
        case ExpCmp::Greater: return "greater";
    }
    return "?";
}

namespace {

void require_prime(long long p, const char* who)
{
    if (!is_prime(p))
        throw domain_error(std::string(who) + ": p must be prime (got " + std::to_string(p) + ")");
}

void require_parity(long long p, int n, const char* who)
{
    if (p != 2 && n % 2 == 0)
        throw parity_error(std::string(who) + ": even n=" + std::to_string(n) +
                           " at odd p=" + std::to_string(p));
}

void require_entry(int n, int q, const char* who)
{
    if (n < 1 || q < 1)
        throw domain_error(std::string(who) + ": n and q must be >= 1");
}

}  // namespace

MainBound main_bound(long long p, int n, int q)
{
    require_prime(p, "main_bound");
    require_entry(n, q, "main_bound");
    require_parity(p, n, "main_bound");
    const long long num = static_cast<long long>(q) - n + 3 - 2 * p;
    MainBound out;
    out.form = ExpForm{2.0, Rational(num, p - 1)};
    out.strong = pow2_floored(floor_div(num, p - 1));
    return out;
}

ExpForm simple_bound(long long p, int n, int q)
{
    require_prime(p, "simple_bound");
    require_entry(n, q, "simple_bound");
    require_parity(p, n, "simple_bound");
    return ExpForm{2.0, Rational(static_cast<long long>(q) - n, p - 1)};
}

BoundValue henn_bound(int n, int q)
{
    require_entry(n, q, "henn_bound");
    return pow2_floored(static_cast<long long>(q) - n + 1);
}

ExpForm bodigheimer_henn_bound(int n, int q)
{
    require_entry(n, q, "bodigheimer_henn_bound");
    return ExpForm{3.0, Rational(2LL * q - n, 2)};
}

ExpForm selick_rank_bound(int q)
{
    if (q < 1)
        throw domain_error("selick_rank_bound: q must be >= 1");
    return ExpForm{3.0, Rational(q) * q};
}

BoundValue fibonacci(int k)
{
    if (k < 1)
        throw domain_error("fibonacci: k must be >= 1");
    BoundValue a = 1, b = 1;
    for (int i = 3; i <= k; ++i) {
        BoundValue next = a + b;
        a = std::move(b);
        b = std::move(next);
    }
    return k == 1 ? a : b;
}

LimitationConstants limitation_constants(long long p)
{
    require_prime(p, "limitation_constants");
    return LimitationConstants{
        ExpForm{kGoldenRatio, Rational(2, 4 * p + 5)},
        ExpForm{0.5, Rational(1, p - 1)},
    };
}

}  // namespace ehp
