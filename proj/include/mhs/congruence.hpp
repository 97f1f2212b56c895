#pragma once

#include <map>
#include <optional>
#include <string>

#include "mhs/exact.hpp"

namespace mhslab {

// Prime-power congruence checks for multiple harmonic sums. Every check is
// formulated as an exact valuation bound v_p(lhs - rhs) >= required on
// rationals; nothing is ever reduced mod p, so values whose denominators
// carry p factors stay well-defined and are reported as such.
struct CongruenceReport {
    std::string check;
    long p;
    std::map<std::string, long> params;
    Rational lhs;
    Rational rhs;
    PadicValuation delta_valuation = PadicValuation::infinite();
    long required = 1;
    bool pass = false;
    // set when one side is itself not p-integral (distinct from a mere
    // congruence failure)
    std::string note;
    // thm4_full additionally records v_p of the full-range sum
    std::optional<PadicValuation> lhs_valuation;
};

// H_{p-1}(a) = 0 (mod p) for a positive or negative even, p > |a| + 1.
CongruenceReport wolstenholme_check(long p, long a);

// H_{p-1}(m,n) (mod p^2), w = m + n even, p > w + 1.
CongruenceReport cong_i(long p, long m, long n);

// H_{p-1}(-m,-n) (mod p^2), m and n even, p > w + 1.
CongruenceReport cong_ii(long p, long m, long n);

// H_{(p-1)/2}(m,n) (mod p), w odd, p > w + 1.
CongruenceReport cong_iii(long p, long m, long n);

// H_{(p-1)/2}(-m,-n) (mod p), m even and n odd, p > w + 1.
CongruenceReport cong_iv(long p, long m, long n);

// sum_{k=1}^{p-1} (H_{k-1}(m) - (-1)^k H_{k-1}(-m)) (H_k(n) + H_{k-1}(n)) / k^r
// = 0 (mod p) for n + r odd, m even, p > max(m,n) + 1.
CongruenceReport lemma_check(long p, long m, long n, long r);

// R_{(p-1)/2}(a,b) = -(2(1-2^{-w})/w) C(w,2a) B_{p-w} (mod p), w = 2a+2b-1.
CongruenceReport thm4_half(long p, long a, long b);

// R_{p-1}(a,b) = 2(a-b+1)/(2a+1) R_{(p-1)/2}(a,b) (mod p).
CongruenceReport thm4_full(long p, long a, long b);

}  // namespace mhslab
