#pragma once

#include <vector>

#include "mhs/hp_real.hpp"
#include "mhs/zeta_expr.hpp"

namespace mhslab {

// zeta(s) for integer s >= 2 via the alternating eta series accelerated with
// the Cohen-Rodriguez Villegas-Zagier scheme; term count chosen from the
// (3+sqrt(8))^-n truncation bound plus guard bits.
HpReal zeta_num(long s, long prec = HpReal::default_precision);

// Independent cross-check scheme: Euler-Maclaurin with exact Bernoulli tail
// coefficients and a first-omitted-term stopping rule.
HpReal zeta_num_euler_maclaurin(long s, long prec = HpReal::default_precision);

// Depth-2 Euler sums H(s1, s2) = sum_{j<k} sgn(s1)^j sgn(s2)^k / (j^|s1| k^|s2|).
// Exactly one slot must be negative (the alternating index).

// Closed form in zeta atoms and ln 2; defined for odd weight |s1| + |s2|.
// Supported shapes:
//   H(m, -n), n >= 2            (m = 1 included)
//   H(m, -1), m even <= 10      (boundary closed form; weight cap 11)
//   H(-n, m), m >= 2            (via the reflection through H(m, -n))
// H(-n, 1) is rejected as divergent.
ZetaExpr euler_sum_symbolic(long s1, long s2);

struct EulerNumeric {
    HpReal value;
    HpReal error_estimate;  // heuristic: change under 8 fewer acceleration terms
    long terms_used;
};

// Numerical evaluation with acceleration on the alternating direction.
// terms = 0 picks a count from the working precision. H(-n, 1) is rejected.
EulerNumeric euler_sum_numeric(long s1, long s2, long prec = HpReal::default_precision,
                               long terms = 0);

// R_infinity(a, b) closed form, b >= 2:
// 4 sum_{r=1}^{a+b-1} (C(2r,2b-2) - C(2r,2a-1)) (1 - 2^{-(2r+1)})
//                     zeta(2r+1) zeta_bar(2(a+b-1-r)).
ZetaExpr r_infty_symbolic(long a, long b);

// Substitutes zeta_num and ln 2 into a formal expression.
HpReal zeta_expr_eval(const ZetaExpr& e, long prec = HpReal::default_precision);

struct ExtrapolationResult {
    HpReal value;
    HpReal error_estimate;     // last ladder-consistency residual
    double fitted_exponent;    // log2 ratio of first differences; 1/n tail -> ~1
    bool converged;            // residuals decreased across elimination orders
    std::vector<long> ladder;  // n values, ascending
    std::vector<double> residuals;
};

// Exact R_n(a,b) on the halving ladder max_n, max_n/2, ..., >= 64, then
// extrapolated. The tail is (c1 ln n + c0)/n + O(ln n / n^2), so each power
// of 1/n is eliminated twice (once for the log coefficient, once for the
// constant). Requires b >= 2 and max_n >= 64.
ExtrapolationResult r_partial_extrapolate(long a, long b, long max_n,
                                          long prec = HpReal::default_precision);

}  // namespace mhslab
