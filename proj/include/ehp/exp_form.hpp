#pragma once

#include <string>

#include "ehp/bound_value.hpp"

namespace ehp {

inline constexpr double kGoldenRatio = 1.6180339887498949;  // (1+sqrt(5))/2

/// A closed-form bound base^exponent with an exact rational exponent. The
/// base is exact for the rational bases (2, 3, 1/2) and stored to 17
/// significant digits for the golden ratio.
struct ExpForm {
    double base = 1.0;
    Rational exponent = 0;

    long double log_value() const;  // exponent * ln(base)
    long double value() const;      // may overflow to +inf for huge exponents

    std::string exponent_string() const;  // "5" or "-3/2"
};

enum class ExpCmp { Less, Indistinguishable, Greater };

/// Compares by exponent*ln(base); differences within rel_tol (relative to the
/// larger magnitude, floored at 1) are reported as indistinguishable.
ExpCmp compare(const ExpForm& a, const ExpForm& b, double rel_tol = 1e-9);

const char* to_string(ExpCmp cmp);

}  // namespace ehp
