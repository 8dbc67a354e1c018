#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "ehp/asymptotics.hpp"
#include "ehp/core.hpp"

using ehp::BoundValue;
using ehp::GrowthMethod;

TEST_CASE("log of exact integers")
{
    CHECK(ehp::log_exact(BoundValue(1)) == 0.0L);
    CHECK(std::fabs(ehp::log_exact(BoundValue(2)) - 0.6931471805599453L) < 1e-15L);

    // 2^1000: the log is exactly 1000 ln 2
    const BoundValue big = BoundValue(1) << 1000;
    CHECK(std::fabs(ehp::log_exact(big) / (1000.0L * 0.6931471805599453L) - 1.0L) < 1e-12L);

    CHECK_THROWS_AS(ehp::log_exact(BoundValue(0)), ehp::domain_error);
    CHECK_THROWS_AS(ehp::log_exact(BoundValue(-4)), ehp::domain_error);
}

TEST_CASE("exact/float bridge for small terms")
{
    // H_q fits a 64-bit integer well past q = 50, so the bit-length route can
    // be compared against the direct conversion.
    const auto h = ehp::h_sequence(50);
    for (const auto& value : h) {
        const long double direct = static_cast<long double>(value.convert_to<std::uint64_t>());
        const long double rel =
            std::fabs(std::exp(ehp::log_exact(value)) - direct) / direct;
        CHECK(rel < 1e-10L);
    }
}

TEST_CASE("ratio sanity: the sequence never decreases")
{
    const auto h = ehp::h_sequence(200);
    for (std::size_t i = 1; i < h.size(); ++i)
        CHECK(h[i] >= h[i - 1]);
}

TEST_CASE("growth constants at the reference window")
{
    const auto est = ehp::estimate_growth(200, 20);
    CHECK(std::fabs(est.nu_hat - 1.794) <= 0.005);
    CHECK(std::fabs(est.k_hat - 0.255) <= 0.02);
    // much tighter values frozen from an independent computation
    CHECK(est.nu_hat == doctest::Approx(1.794147).epsilon(1e-4));
    CHECK(est.k_hat == doctest::Approx(0.254506).epsilon(1e-3));
    CHECK(est.nu_hat > 1.0);
    CHECK(est.k_hat > 0.0);
    CHECK(est.residual >= 0.0);
    CHECK(est.residual < 1e-9);
    CHECK(est.method == "geometric-window");
}

TEST_CASE("coarser windows stay close")
{
    const auto est = ehp::estimate_growth(60, 10);
    CHECK(std::fabs(est.nu_hat - 1.794) <= 0.02);
}

TEST_CASE("convergence stability")
{
    const auto e200 = ehp::estimate_growth(200, 20);
    const auto e150 = ehp::estimate_growth(150, 20);
    CHECK(std::fabs(e200.nu_hat - e150.nu_hat) < 0.01);

    const auto w10 = ehp::estimate_growth(200, 10);
    const auto w30 = ehp::estimate_growth(200, 30);
    CHECK(std::fabs(w10.k_hat - w30.k_hat) < 0.02);
}

TEST_CASE("estimation methods agree")
{
    const auto geo = ehp::estimate_growth(200, 20, GrowthMethod::GeometricWindow);
    const auto ratio = ehp::estimate_growth(200, 20, GrowthMethod::Ratio);
    const auto fit = ehp::estimate_growth(200, 20, GrowthMethod::LogLinearFit);
    CHECK(std::fabs(geo.nu_hat - ratio.nu_hat) < 5e-3);
    CHECK(std::fabs(geo.nu_hat - fit.nu_hat) < 5e-3);
    CHECK(std::fabs(geo.k_hat - fit.k_hat) < 5e-3);
    CHECK(ratio.method == "ratio");
    CHECK(fit.method == "log-linear-fit");
}

TEST_CASE("preconditions")
{
    CHECK_THROWS_AS(ehp::estimate_growth(40, 20), ehp::domain_error);
    CHECK_THROWS_AS(ehp::estimate_growth(200, 5), ehp::domain_error);
    CHECK_THROWS_AS(ehp::estimate_growth(25, 20), ehp::domain_error);
    CHECK_THROWS_AS(ehp::golden_floor_check(20), ehp::domain_error);
}

TEST_CASE("golden floor")
{
    CHECK(ehp::golden_floor_check(100).passed());
    CHECK(ehp::golden_floor_check(30).passed());
}
