#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ehp/asymptotics.hpp"
#include "ehp/bound_value.hpp"
#include "ehp/core.hpp"
#include "ehp/known_data.hpp"
#include "ehp/report.hpp"

namespace ehp {

enum class Format { Csv, Json, Md };

Format format_from_string(std::string_view name);
const char* to_string(Format format);

/// Deterministic text for a real number (%.*Lg), used by every renderer so
/// that identical invocations stay byte-identical.
std::string format_real(long double v, int significant = 12);

/// One row of the `bounds` listing for a fixed (p, n, q).
struct BoundsRow {
    std::string name;
    std::string base;      // empty when not an exponential form
    std::string exponent;  // exact rational text
    std::string value;     // real value, or exact integer for integer bounds
    std::string integer;   // floor-strengthened integer form when one exists
    std::string note;
};

std::vector<BoundsRow> bounds_rows(long long p, int n, int q);

std::string render_value(const BoundValue& value);
std::string render_stem_table(const StemTable& table, Format format);
std::string render_sequence(const std::vector<BoundValue>& h, Format format);
std::string render_bounds(const std::vector<BoundsRow>& rows, Format format);
std::string render_reports(const std::vector<VerificationReport>& reports, Format format);
std::string render_estimate(const GrowthEstimate& estimate, Format format);
std::string render_comparison(const ComparisonReport& report, Format format);

}  // namespace ehp
