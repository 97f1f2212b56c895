#include "mhs/exact.hpp"

#include <mutex>
#include <vector>

namespace mhslab {

Integer binomial(long n, long k) {
    if (n < 0) throw std::invalid_argument("binomial: n must be >= 0");
    if (k < 0 || k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return r;
}

Rational binomial_ratio(long n, long k) {
    Rational q(binomial(n, k), binomial(n + k, k));
    q.canonicalize();
    return q;
}

namespace {

std::mutex bernoulli_mutex;
std::vector<Rational> bernoulli_cache;

// sum_{j=0}^{k} C(k+1, j) B_j = 0 for k >= 1, solved for B_k
void extend_bernoulli(long k) {
    if (bernoulli_cache.empty()) bernoulli_cache.emplace_back(1);
    for (long i = static_cast<long>(bernoulli_cache.size()); i <= k; ++i) {
        Rational acc(0);
        for (long j = 0; j < i; ++j)
            acc += Rational(binomial(i + 1, j)) * bernoulli_cache[j];
        Rational b = -acc / Rational(i + 1);  // C(i+1, i) = i+1
        b.canonicalize();
        bernoulli_cache.push_back(b);
    }
}

}  // namespace

Rational bernoulli(long k) {
    if (k < 0) throw std::invalid_argument("bernoulli: k must be >= 0");
    std::lock_guard<std::mutex> lock(bernoulli_mutex);
    extend_bernoulli(k);
    return bernoulli_cache[k];
}

bool is_prime(long p) {
    if (p < 2) return false;
    for (long q = 2; q * q <= p; ++q)
        if (p % q == 0) return false;
    return true;
}

namespace {

long remove_factor(Integer& n, long p) {
    Integer q(p);
    Integer out;
    long v = static_cast<long>(mpz_remove(out.get_mpz_t(), n.get_mpz_t(), q.get_mpz_t()));
    n = out;
    return v;
}

}  // namespace

PadicValuation p_adic_valuation(const Rational& x, long p) {
    if (!is_prime(p)) throw std::invalid_argument("p_adic_valuation: p must be prime");
    if (x == 0) return PadicValuation::infinite();
    Integer num = x.get_num(), den = x.get_den();
    long v = remove_factor(num, p) - remove_factor(den, p);
    return PadicValuation::finite(v);
}

Integer reduce_mod(const Rational& x, long p, long e) {
    if (!is_prime(p)) throw std::invalid_argument("reduce_mod: p must be prime");
    if (e < 1) throw std::invalid_argument("reduce_mod: e must be >= 1");
    // x canonical, so p divides at most one of num, den
    if (x.get_den() % p == 0)
        throw not_p_integral("reduce_mod: value is not p-integral");
    Integer mod;
    mpz_ui_pow_ui(mod.get_mpz_t(), static_cast<unsigned long>(p),
                  static_cast<unsigned long>(e));
    Integer inv;
    if (mpz_invert(inv.get_mpz_t(), x.get_den().get_mpz_t(), mod.get_mpz_t()) == 0)
        throw not_p_integral("reduce_mod: denominator not invertible");
    Integer r = (x.get_num() * inv) % mod;
    if (r < 0) r += mod;
    return r;
}

Rational pow2(long k) {
    Rational q(1);
    if (k >= 0)
        mpq_mul_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<unsigned long>(k));
    else
        mpq_div_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<unsigned long>(-k));
    return q;
}

}  // namespace mhslab
