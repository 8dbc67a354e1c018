#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ehp {

/// One failed check. lhs and rhs record the two sides of the relation as
/// decimal strings, so a violation is re-checkable from (p, n, q) alone.
struct Violation {
    long long p = 0;
    int n = 0;
    int q = 0;
    std::string relation;
    std::string lhs;
    std::string rhs;
};

bool operator==(const Violation& a, const Violation& b);

struct VerificationReport {
    std::string suite;
    std::string ranges;
    std::uint64_t checks_run = 0;
    std::vector<Violation> violations;

    bool passed() const { return violations.empty(); }

    /// Canonical order: (p, n, q, relation). Parallel and serial runs of a
    /// suite are byte-identical after this sort.
    void sort_violations();
};

}  // namespace ehp
