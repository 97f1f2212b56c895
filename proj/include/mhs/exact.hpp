#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace mhslab {

// Exact arbitrary-precision rational, always canonical (lowest terms,
// denominator >= 1). mpq_class arithmetic keeps results canonical as long
// as operands are; use rational(num, den) to build from raw parts.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rational(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

// Thrown when an argument is not p-integral where a residue is required.
struct not_p_integral : std::domain_error {
    using std::domain_error::domain_error;
};

// Thrown when a brute-force enumeration would exceed its size guard.
struct guard_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// p-adic valuation value: an integer, or infinite (valuation of 0).
class PadicValuation {
public:
    static PadicValuation infinite() { return PadicValuation(true, 0); }
    static PadicValuation finite(long v) { return PadicValuation(false, v); }

    bool is_infinite() const { return infinite_; }
    long value() const {
        if (infinite_) throw std::logic_error("valuation of zero is infinite");
        return v_;
    }
    // infinity exceeds every finite bound
    bool at_least(long bound) const { return infinite_ || v_ >= bound; }
    bool operator==(const PadicValuation& o) const = default;

    std::string str() const { return infinite_ ? "inf" : std::to_string(v_); }

private:
    PadicValuation(bool inf, long v) : infinite_(inf), v_(v) {}
    bool infinite_;
    long v_;
};

// C(n, k); 0 outside 0 <= k <= n so identity sums can run unguarded ranges.
Integer binomial(long n, long k);

// Binomial ratio C(n,k)/C(n+k,k) as an exact rational.
Rational binomial_ratio(long n, long k);

// B_k with B_1 = -1/2 (generating function t/(e^t - 1)), exact, memoized.
// Thread-safe: cache extension is serialized by a mutex.
Rational bernoulli(long k);

// Trial-division primality; intended for desk-scale moduli.
bool is_prime(long p);

// Exact p-adic valuation of x; infinite for x = 0. p must be prime.
PadicValuation p_adic_valuation(const Rational& x, long p);

// Unique residue r in [0, p^e) with x = r (mod p^e). Requires v_p(x) >= 0
// (denominator invertible mod p^e); otherwise throws not_p_integral.
Integer reduce_mod(const Rational& x, long p, long e);

// 2^k as an exact rational, k may be negative.
Rational pow2(long k);

}  // namespace mhslab
