#pragma once

#include "ehp/bound_value.hpp"
#include "ehp/exp_form.hpp"

namespace ehp {

/// The stem-exponential bound 2^{(q-n+3-2p)/(p-1)} together with its
/// floor-strengthened integer form 2^{floor((q-n+3-2p)/(p-1))}, which is 0
/// once the floored exponent is negative.
struct MainBound {
    ExpForm form;
    BoundValue strong;
};

/// Requires p prime and (n odd or p = 2); n, q >= 1.
MainBound main_bound(long long p, int n, int q);

/// The weaker form 2^{(q-n)/(p-1)}. Same domain as main_bound.
ExpForm simple_bound(long long p, int n, int q);

/// 2^{q-n+1} exactly; 0 when the exponent is negative (same floor
/// convention as every other integer-valued bound here).
BoundValue henn_bound(int n, int q);

/// (3, q - n/2) with exact rational exponent.
ExpForm bodigheimer_henn_bound(int n, int q);

/// (3, q^2); q >= 1.
ExpForm selick_rank_bound(int q);

/// F_k with F_1 = F_2 = 1; k >= 1.
BoundValue fibonacci(int k);

struct LimitationConstants {
    ExpForm golden_base;  // (phi, 2/(4p+5)): lower limit on any bound base
    ExpForm cp_lower;     // (1/2, 1/(p-1)): radius-of-convergence constant
};

LimitationConstants limitation_constants(long long p);

}  // namespace ehp
