#pragma once

#include <vector>

#include "mhs/exact.hpp"
#include "mhs/signature.hpp"

namespace mhslab {

// H_n(s) = sum over 1 <= k_1 < ... < k_l <= n of prod sgn(s_i)^{k_i} / k_i^{|s_i|}.
// 1 for the empty signature, 0 when n < length(s). O(n*l) prefix recurrence.
Rational mhs(long n, const Signature& s);

// H_k(s) for every k = 0..n in one pass; element k of the result is mhs(k, s).
std::vector<Rational> mhs_prefix(long n, const Signature& s);

// Same value as mhs by explicit enumeration of all index tuples. Independent
// code path kept for tests; guarded by C(n, l) <= 10^7.
Rational mhs_oracle(long n, const Signature& s);

// S_{m,n}(s) = sum over m <= k_1 <= ... <= k_l <= n of prod 1/k_i^{s_i},
// entries positive. 1 for the empty signature, 0 when m > n and l >= 1.
Rational s_sum(long m, long n, const Signature& s);

// S_{1,k}(s) for every k = 0..n in one pass.
std::vector<Rational> s_sum_prefix(long n, const Signature& s);

// R_n(a,b) = sum_{k=1}^n S_{1,k-1}({2}^a) S_{k,n}({2}^{b-1}) / (2k-1),
// computed with prefix/suffix tables in O(n*(a+b)) rational operations.
Rational r_sum(long n, long a, long b);

// Direct enumeration over 1 <= j_1 <= ... <= j_a < k_1 <= ... <= k_b <= n with
// summand 1/(j_1^2...j_a^2 (2 k_1 - 1) k_2^2...k_b^2). Guarded like mhs_oracle.
Rational r_sum_direct(long n, long a, long b);

}  // namespace mhslab
