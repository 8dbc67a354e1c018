#include "ehp/report.hpp"

#include <algorithm>
#include <tuple>

namespace ehp {

bool operator==(const Violation& a, const Violation& b)
{
    return a.p == b.p && a.n == b.n && a.q == b.q && a.relation == b.relation &&
           a.lhs == b.lhs && a.rhs == b.rhs;
}

void VerificationReport::sort_violations()
{
    std::sort(violations.begin(), violations.end(), [](const Violation& a, const Violation& b) {
        return std::tie(a.p, a.n, a.q, a.relation) < std::tie(b.p, b.n, b.q, b.relation);
    });
}

}  // namespace ehp
