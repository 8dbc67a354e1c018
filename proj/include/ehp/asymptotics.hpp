#pragma once

#include <string>
#include <string_view>

#include "ehp/bound_value.hpp"
#include "ehp/report.hpp"

namespace ehp {

/// Natural log of an exact positive integer, computed from the bit length
/// plus the leading 64 bits. Relative error < 1e-12.
long double log_exact(const BoundValue& v);

enum class GrowthMethod { Ratio, GeometricWindow, LogLinearFit };

const char* to_string(GrowthMethod method);
GrowthMethod growth_method_from_string(std::string_view name);

struct GrowthEstimate {
    double nu_hat = 0.0;   // estimated growth ratio
    double k_hat = 0.0;    // estimated multiplicative constant
    int q_used = 0;
    int window = 0;
    std::string method;
    double residual = 0.0; // max |log H_q - (log k_hat + q log nu_hat)| on the window
};

/// Estimates H_q ~ K nu^q from the exact sequence. Default method takes the
/// window-geometric ratio nu = (H_{q_max}/H_{q_max-window})^{1/window} and
/// anchors k at the endpoint. q_max >= 50, window >= 10, q_max >= window+10.
GrowthEstimate estimate_growth(int q_max, int window,
                               GrowthMethod method = GrowthMethod::GeometricWindow);

/// Checks that the estimated growth base is at least phi^{2/13}, the lower
/// limit for any exponential bound base obtainable from the recursion at
/// p = 2. q_max >= 30.
VerificationReport golden_floor_check(int q_max);

}  // namespace ehp
