#include "ehp/asymptotics.hpp"

#include <cmath>
#include <sstream>

#include "ehp/bounds.hpp"
#include "ehp/core.hpp"

namespace ehp {

namespace {

constexpr long double kLn2 = 0.69314718055994530941723212145818L;

}  // namespace

long double log_exact(const BoundValue& v)
{
    if (v <= 0)
        throw domain_error("log_exact: value must be positive");
    const unsigned bits = boost::multiprecision::msb(v) + 1;
    if (bits <= 64)
        return std::log(static_cast<long double>(v.convert_to<std::uint64_t>()));
    const unsigned shift = bits - 64;
    const BoundValue top = v >> shift;
    return std::log(static_cast<long double>(top.convert_to<std::uint64_t>())) +
           static_cast<long double>(shift) * kLn2;
}

const char* to_string(GrowthMethod method)
{
    switch (method) {
        case GrowthMethod::Ratio: return "ratio";
        case GrowthMethod::GeometricWindow: return "geometric-window";
        case GrowthMethod::LogLinearFit: return "log-linear-fit";
    }
    return "?";
}

GrowthMethod growth_method_from_string(std::string_view name)
{
    if (name == "ratio")
        return GrowthMethod::Ratio;
    if (name == "geometric-window")
        return GrowthMethod::GeometricWindow;
    if (name == "log-linear-fit")
        return GrowthMethod::LogLinearFit;
    throw domain_error("unknown growth method: " + std::string(name));
}

namespace {

GrowthEstimate estimate_impl(int q_max, int window, GrowthMethod method)
{
    if (window < 1 || q_max < window + 10)
        throw domain_error("estimate_growth: need window >= 1 and q_max >= window + 10");

    const auto h = h_sequence(q_max);
    auto log_h = [&](int q) { return log_exact(h[q - 1]); };

    long double log_nu = 0.0L;
    long double log_k = 0.0L;
    switch (method) {
        case GrowthMethod::Ratio:
            log_nu = log_h(q_max) - log_h(q_max - 1);
            log_k = log_h(q_max) - q_max * log_nu;
            break;
        case GrowthMethod::GeometricWindow:
            log_nu = (log_h(q_max) - log_h(q_max - window)) / window;
            log_k = log_h(q_max) - q_max * log_nu;
            break;
        case GrowthMethod::LogLinearFit: {
            // Least squares on log H_q over q in [q_max-window, q_max].
            long double sx = 0, sy = 0, sxx = 0, sxy = 0;
            const int count = window + 1;
            for (int q = q_max - window; q <= q_max; ++q) {
                const long double y = log_h(q);
                sx += q;
                sy += y;
                sxx += static_cast<long double>(q) * q;
                sxy += q * y;
            }
            log_nu = (count * sxy - sx * sy) / (count * sxx - sx * sx);
            log_k = (sy - log_nu * sx) / count;
            break;
        }
    }

    long double residual = 0.0L;
    for (int q = q_max - window + 1; q <= q_max; ++q)
        residual = std::max(residual, std::fabs(log_h(q) - (log_k + q * log_nu)));

    GrowthEstimate out;
    out.nu_hat = static_cast<double>(std::exp(log_nu));
    out.k_hat = static_cast<double>(std::exp(log_k));
    out.q_used = q_max;
    out.window = window;
    out.method = to_string(method);
    out.residual = static_cast<double>(residual);
    return out;
}

}  // namespace

GrowthEstimate estimate_growth(int q_max, int window, GrowthMethod method)
{
    if (q_max < 50 || window < 10)
        throw domain_error("estimate_growth: need q_max >= 50 and window >= 10");
    return estimate_impl(q_max, window, method);
}

VerificationReport golden_floor_check(int q_max)
{
    if (q_max < 30)
        throw domain_error("golden_floor_check: q_max must be >= 30");
    const int window = q_max >= 60 ? 20 : 10;
    const GrowthEstimate est = estimate_impl(q_max, window, GrowthMethod::GeometricWindow);
    const long double floor = limitation_constants(2).golden_base.value();

    VerificationReport report;
    report.suite = "golden-floor";
    {
        std::ostringstream os;
        os << "p=2 q_max=" << q_max << " window=" << window;
        report.ranges = os.str();
    }
    report.checks_run = 1;
    if (static_cast<long double>(est.nu_hat) < floor) {
        std::ostringstream lhs, rhs;
        lhs << est.nu_hat;
        rhs << static_cast<double>(floor);
        report.violations.push_back({2, 2, q_max, "nu_hat>=phi^(2/13)", lhs.str(), rhs.str()});
    }
    return report;
}

}  // namespace ehp
