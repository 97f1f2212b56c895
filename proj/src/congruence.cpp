#include "mhs/congruence.hpp"

#include <algorithm>
#include <cstdlib>

#include "mhs/signature.hpp"
#include "mhs/sums.hpp"

namespace mhslab {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument(what);
}

void require_prime(long p) { require(is_prime(p), "p must be prime"); }

Rational neg_pow(long k) { return Rational((k % 2 != 0) ? -1 : 1); }

// Bernoulli number with a von Staudt-Clausen sanity assertion: under every
// caller's precondition 0 < p-1-index gap, p never divides the denominator.
Rational bernoulli_checked(long index, long p) {
    Rational b = bernoulli(index);
    if (b.get_den() % p == 0)
        throw std::logic_error("bernoulli denominator divisible by p; precondition broken");
    return b;
}

CongruenceReport make_report(std::string check, long p, std::map<std::string, long> params,
                             Rational lhs, Rational rhs, long required) {
    CongruenceReport rep;
    rep.check = std::move(check);
    rep.p = p;
    rep.params = std::move(params);
    rep.delta_valuation = p_adic_valuation(lhs - rhs, p);
    rep.required = required;
    rep.pass = rep.delta_valuation.at_least(required);
    if (!p_adic_valuation(lhs, p).at_least(0)) rep.note = "lhs not p-integral";
    else if (!p_adic_valuation(rhs, p).at_least(0)) rep.note = "rhs not p-integral";
    rep.lhs = std::move(lhs);
    rep.rhs = std::move(rhs);
    return rep;
}

}  // namespace

CongruenceReport wolstenholme_check(long p, long a) {
    require_prime(p);
    require(a != 0 && (a > 0 || a % 2 == 0), "wolstenholme requires a positive or negative even a");
    require(p > std::abs(a) + 1, "wolstenholme requires p > |a| + 1");
    Rational lhs = mhs(p - 1, Signature{a});
    return make_report("wolstenholme", p, {{"a", a}}, std::move(lhs), Rational(0), 1);
}

CongruenceReport cong_i(long p, long m, long n) {
    require_prime(p);
    require(m >= 1 && n >= 1, "i requires m, n >= 1");
    const long w = m + n;
    require(w % 2 == 0, "i requires even weight m + n");
    require(p > w + 1, "i requires p > w + 1");
    Rational lhs = mhs(p - 1, Signature{m, n});
    Rational coef = neg_pow(m) * Rational(n) * Rational(binomial(w + 1, m)) -
                    neg_pow(m) * Rational(m) * Rational(binomial(w + 1, n)) - Rational(w);
    Rational rhs = coef * Rational(p) * bernoulli_checked(p - w - 1, p) / Rational(2 * (w + 1));
    return make_report("i", p, {{"m", m}, {"n", n}}, std::move(lhs), std::move(rhs), 2);
}

CongruenceReport cong_ii(long p, long m, long n) {
    require_prime(p);
    require(m >= 2 && m % 2 == 0, "ii requires even m");
    require(n >= 2 && n % 2 == 0, "ii requires even n");
    const long w = m + n;
    require(p > w + 1, "ii requires p > w + 1");
    Rational lhs = mhs(p - 1, Signature{-m, -n});
    Rational coef = Rational(m - n) * (Rational(1) - pow2(-w)) /
                        Rational(2 * (m + 1) * (n + 1)) * Rational(binomial(w, m)) -
                    rational(w, 2 * (w + 1));
    Rational rhs = coef * Rational(p) * bernoulli_checked(p - w - 1, p);
    return make_report("ii", p, {{"m", m}, {"n", n}}, std::move(lhs), std::move(rhs), 2);
}

CongruenceReport cong_iii(long p, long m, long n) {
    require_prime(p);
    require(m >= 1 && n >= 1, "iii requires m, n >= 1");
    const long w = m + n;
    require(w % 2 == 1, "iii requires odd weight m + n");
    require(p > w + 1, "iii requires p > w + 1");
    Rational lhs = mhs((p - 1) / 2, Signature{m, n});
    Rational coef = neg_pow(n) * Rational(binomial(w, m)) + pow2(w) - Rational(2);
    Rational rhs = coef * bernoulli_checked(p - w, p) / Rational(2 * w);
    return make_report("iii", p, {{"m", m}, {"n", n}}, std::move(lhs), std::move(rhs), 1);
}

CongruenceReport cong_iv(long p, long m, long n) {
    require_prime(p);
    require(m >= 2 && m % 2 == 0, "iv requires even m");
    require(n >= 1 && n % 2 == 1, "iv requires odd n");
    const long w = m + n;
    require(p > w + 1, "iv requires p > w + 1");
    Rational lhs = mhs((p - 1) / 2, Signature{-m, -n});
    Rational coef = Rational(binomial(w, m)) * pow2(-w) + Rational(1);
    Rational rhs = coef * (pow2(w - 1) - Rational(1)) * bernoulli_checked(p - w, p) / Rational(w);
    return make_report("iv", p, {{"m", m}, {"n", n}}, std::move(lhs), std::move(rhs), 1);
}

CongruenceReport lemma_check(long p, long m, long n, long r) {
    require_prime(p);
    require(m >= 2 && m % 2 == 0, "lemma requires even m");
    require(n >= 1 && r >= 1, "lemma requires n, r >= 1");
    require((n + r) % 2 == 1, "lemma requires odd n + r");
    require(p > std::max(m, n) + 1, "lemma requires p > max(m, n) + 1");
    std::vector<Rational> hm = mhs_prefix(p - 1, Signature{m});
    std::vector<Rational> hmneg = mhs_prefix(p - 1, Signature{-m});
    std::vector<Rational> hn = mhs_prefix(p - 1, Signature{n});
    Rational L(0);
    for (long k = 1; k <= p - 1; ++k) {
        Integer kr;
        mpz_ui_pow_ui(kr.get_mpz_t(), static_cast<unsigned long>(k),
                      static_cast<unsigned long>(r));
        Rational t = (hm[k - 1] - neg_pow(k) * hmneg[k - 1]) * (hn[k] + hn[k - 1]);
        t /= Rational(kr);
        L += t;
    }
    return make_report("lemma", p, {{"m", m}, {"n", n}, {"r", r}}, std::move(L), Rational(0), 1);
}

CongruenceReport thm4_half(long p, long a, long b) {
    require_prime(p);
    require(a >= 1 && b >= 1, "thm4-half requires a, b >= 1");
    const long w = 2 * a + 2 * b - 1;
    require(p > w, "thm4-half requires p > 2a + 2b - 1");
    Rational lhs = r_sum((p - 1) / 2, a, b);
    Rational rhs = -Rational(2) * (Rational(1) - pow2(-w)) / Rational(w) *
                   Rational(binomial(w, 2 * a)) * bernoulli_checked(p - w, p);
    return make_report("thm4-half", p, {{"a", a}, {"b", b}}, std::move(lhs), std::move(rhs), 1);
}

CongruenceReport thm4_full(long p, long a, long b) {
    require_prime(p);
    require(a >= 1 && b >= 1, "thm4-full requires a, b >= 1");
    const long w = 2 * a + 2 * b - 1;
    require(p > w, "thm4-full requires p > 2a + 2b - 1");
    Rational lhs = r_sum(p - 1, a, b);
    Rational rhs = rational(2 * (a - b + 1), 2 * a + 1) * r_sum((p - 1) / 2, a, b);
    CongruenceReport rep =
        make_report("thm4-full", p, {{"a", a}, {"b", b}}, std::move(lhs), std::move(rhs), 1);
    // the k = (p+1)/2 term of R_{p-1} carries a bare p in its denominator;
    // record the observed valuation instead of assuming integrality
    rep.lhs_valuation = p_adic_valuation(rep.lhs, p);
    return rep;
}

}  // namespace mhslab
