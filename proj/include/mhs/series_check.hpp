#pragma once

#include "mhs/biseries.hpp"
#include "mhs/exact.hpp"

namespace mhslab {

// Master coefficient-extraction identity relating the inverse-binomial sum
//   sum_{k=1}^n (-1)^k/k^r C(n,k)/C(n+k,k) (H_k(d) - (-1)^{r+d} H_{k-1}(d))
// to [z^{r-1}][w^d] of a product of (1 - z^2/j^2)^-1, (1 - w^2/j^2)^-1
// factors against a five-term bracket. Both sides are exact rationals.
//
// n >= 0 (empty sum allowed), r >= 1, d >= 1. `pad` enlarges the truncation
// orders beyond the minimal (r-1, d); the extracted coefficient must not
// depend on it.
Rational gf2_lhs(long n, long r, long d);
Rational gf2_rhs(long n, long r, long d, long pad = 0);

// Product/series form of the weighted binomial transform
//   sum_{k=1}^n (-1)^k/k^r C(n,k) C(n+k,k) H_k(d):
// expands 2 sum_k z/(1-z/k) prod_{j>k} (1+z/j)/(1-z/j) *
// ((-1)^k/k^2 - w/(k^3 (1-w/k)) prod_{j<k} (1+w/j)/(1-w/j)) and extracts
// [z^r][w^{d-1}]. Returns equality with the direct binomial sum.
bool thm1_series_check(long n, long r, long d, long pad = 0);

// The two specialized extractions of the master identity:
//   [z^{2b-2}][w^1]      -> -1/2 S_n({2}^b)
//   [z^{2b-1}][w^{2a+1}] -> -1/2 S_n({2}^a, 3, {2}^{b-1})
struct SpecializationResult {
    bool even_case;  // (r, d) = (2b-1, 1)
    bool odd_case;   // (r, d) = (2b, 2a+1)
};
SpecializationResult specialization_checks(long n, long a, long b);

}  // namespace mhslab
