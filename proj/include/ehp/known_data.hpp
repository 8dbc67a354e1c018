#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "ehp/bound_value.hpp"
#include "ehp/core.hpp"

namespace ehp {

/// An externally sourced actual value of s_p(n,q): the base-p logarithm of
/// the cardinality of the p-torsion part of pi_q(S^n).
struct KnownTorsionRecord {
    long long p = 0;
    int n = 0;
    int q = 0;
    long long s = 0;
    std::string source;
};

bool operator==(const KnownTorsionRecord& a, const KnownTorsionRecord& b);

struct LineIssue {
    int line = 0;   // 1-based
    int field = 0;  // 1-based field index, 0 when the whole line is at fault
    std::string reason;
};

class parse_error : public std::runtime_error {
  public:
    parse_error(std::string what, std::vector<LineIssue> issues);
    const std::vector<LineIssue>& issues() const { return issues_; }

  private:
    std::vector<LineIssue> issues_;
};

/// Loads a CSV file with header "p,n,q,s,source". '#'-prefixed lines and
/// blank lines are skipped; the source field is free text and may contain
/// commas. Malformed or invalid lines are collected and thrown together as a
/// parse_error listing every offending line.
std::vector<KnownTorsionRecord> load_known(const std::string& path);
std::vector<KnownTorsionRecord> parse_known(std::istream& in);

/// Serializes records in the load_known format (round-trips exactly).
std::string to_csv(const std::vector<KnownTorsionRecord>& records);

struct ComparisonRow {
    KnownTorsionRecord rec;
    std::string bound;       // "t", "strong", "henn", "bodigheimer-henn"
    std::string value_text;
    std::string margin_text;
    bool exact = true;       // integer margin (margin_int) vs real (margin_real)
    BoundValue margin_int;   // bound - s, exact
    long double margin_real = 0.0L;
    bool ok = true;          // margin >= 0
    bool via_splitting = false;
};

struct ComparisonReport {
    std::vector<ComparisonRow> rows;
    int records = 0;
    int rows_ok = 0;
    int rows_violating = 0;

    bool all_ok() const { return rows_violating == 0; }
};

/// Margins of every bound family against each record. A negative margin
/// falsifies either the data row or the implementation; it is flagged in the
/// row, never thrown.
ComparisonReport compare_known(const std::vector<KnownTorsionRecord>& records,
                               P2Policy policy = P2Policy::SpecialAtQ2nMinus1);

}  // namespace ehp
