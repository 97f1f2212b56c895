#include "mhs/sums.hpp"

#include <cstdlib>

namespace mhslab {

namespace {

// sgn(s)^k / k^|s|
Rational index_term(long k, long s) {
    Rational t(((s < 0) && (k % 2 != 0)) ? -1 : 1);
    Integer kp;
    mpz_ui_pow_ui(kp.get_mpz_t(), static_cast<unsigned long>(k),
                  static_cast<unsigned long>(std::labs(s)));
    t /= Rational(kp);
    return t;
}

void check_enumeration_guard(long n, std::size_t l, const char* what) {
    if (binomial(n, static_cast<long>(l)) > 10'000'000)
        throw guard_error(std::string(what) + ": enumeration guard exceeded");
}

}  // namespace

std::vector<Rational> mhs_prefix(long n, const Signature& s) {
    if (n < 0) n = 0;
    const std::size_t l = s.length();
    std::vector<Rational> out;
    out.reserve(static_cast<std::size_t>(n) + 1);
    // P[i] holds the depth-i sum over indices <= k; update deepest first so
    // every index tuple stays strictly increasing
    std::vector<Rational> P(l + 1, Rational(0));
    P[0] = 1;
    out.push_back(P[l]);
    for (long k = 1; k <= n; ++k) {
        std::size_t top = std::min<std::size_t>(static_cast<std::size_t>(k), l);
        for (std::size_t i = top; i >= 1; --i)
            P[i] += index_term(k, s.entry(i - 1)) * P[i - 1];
        out.push_back(P[l]);
    }
    return out;
}

Rational mhs(long n, const Signature& s) {
    if (s.empty()) return Rational(1);
    if (n < static_cast<long>(s.length())) return Rational(0);
    return mhs_prefix(n, s).back();
}

Rational mhs_oracle(long n, const Signature& s) {
    const std::size_t l = s.length();
    if (l == 0) return Rational(1);
    if (n < static_cast<long>(l)) return Rational(0);
    check_enumeration_guard(n, l, "mhs_oracle");
    Rational total(0);
    auto rec = [&](auto&& self, std::size_t depth, long start, const Rational& acc) -> void {
        if (depth == l) {
            total += acc;
            return;
        }
        for (long k = start; k <= n; ++k)
            self(self, depth + 1, k + 1, Rational(acc * index_term(k, s.entry(depth))));
    };
    rec(rec, 0, 1, Rational(1));
    return total;
}

std::vector<Rational> s_sum_prefix(long n, const Signature& s) {
    if (!s.all_positive())
        throw std::invalid_argument("s_sum: entries must be positive");
    if (n < 0) n = 0;
    const std::size_t l = s.length();
    std::vector<Rational> out;
    out.reserve(static_cast<std::size_t>(n) + 1);
    std::vector<Rational> Q(l + 1, Rational(0));
    Q[0] = 1;
    out.push_back(Q[l]);
    for (long k = 1; k <= n; ++k) {
        // non-strict: shallower depths may reuse index k, so update in order
        for (std::size_t i = 1; i <= l; ++i)
            Q[i] += index_term(k, s.entry(i - 1)) * Q[i - 1];
        out.push_back(Q[l]);
    }
    return out;
}

Rational s_sum(long m, long n, const Signature& s) {
    if (!s.all_positive())
        throw std::invalid_argument("s_sum: entries must be positive");
    if (m < 1) throw std::invalid_argument("s_sum: m must be >= 1");
    if (s.empty()) return Rational(1);
    if (m > n) return Rational(0);
    const std::size_t l = s.length();
    std::vector<Rational> Q(l + 1, Rational(0));
    Q[0] = 1;
    for (long k = m; k <= n; ++k)
        for (std::size_t i = 1; i <= l; ++i)
            Q[i] += index_term(k, s.entry(i - 1)) * Q[i - 1];
    return Q[l];
}

Rational r_sum(long n, long a, long b) {
    if (a < 1 || b < 1) throw std::invalid_argument("r_sum: a, b must be >= 1");
    if (n < 0) n = 0;
    // pre[k] = S_{1,k}({2}^a); suf[k] = S_{k,n}({2}^{b-1}) by the suffix
    // recurrence S_{k,n}({2}^i) = S_{k+1,n}({2}^i) + S_{k,n}({2}^{i-1})/k^2
    std::vector<Rational> pre = s_sum_prefix(n, repeat_block(Signature{2}, a));
    std::vector<std::vector<Rational>> S(
        static_cast<std::size_t>(b),
        std::vector<Rational>(static_cast<std::size_t>(n) + 2, Rational(0)));
    for (long k = 0; k <= n + 1; ++k) S[0][static_cast<std::size_t>(k)] = 1;
    for (long i = 1; i <= b - 1; ++i)
        for (long k = n; k >= 1; --k)
            S[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] =
                S[static_cast<std::size_t>(i)][static_cast<std::size_t>(k) + 1] +
                index_term(k, 2) * S[static_cast<std::size_t>(i) - 1][static_cast<std::size_t>(k)];
    const std::vector<Rational>& suf = S[static_cast<std::size_t>(b) - 1];
    Rational total(0);
    for (long k = 1; k <= n; ++k)
        total += pre[static_cast<std::size_t>(k - 1)] * suf[static_cast<std::size_t>(k)] /
                 Rational(2 * k - 1);
    return total;
}

Rational r_sum_direct(long n, long a, long b) {
    if (a < 1 || b < 1) throw std::invalid_argument("r_sum_direct: a, b must be >= 1");
    if (n < 0) n = 0;
    check_enumeration_guard(n, static_cast<std::size_t>(a + b), "r_sum_direct");
    Rational total(0);
    // 1 <= j_1 <= ... <= j_a < k_1 <= ... <= k_b <= n; only k_1 carries 2k-1
    auto rec_k = [&](auto&& self, long depth, long start, const Rational& acc) -> void {
        if (depth == b) {
            total += acc;
            return;
        }
        for (long k = start; k <= n; ++k) {
            Rational f = (depth == 0) ? Rational(1, 2 * k - 1) : index_term(k, 2);
            f.canonicalize();
            self(self, depth + 1, k, Rational(acc * f));
        }
    };
    auto rec_j = [&](auto&& self, long depth, long start, const Rational& acc) -> void {
        if (depth == a) {
            rec_k(rec_k, 0, start + 1, acc);
            return;
        }
        for (long j = start; j <= n; ++j)
            self(self, depth + 1, j, Rational(acc * index_term(j, 2)));
    };
    rec_j(rec_j, 0, 1, Rational(1));
    return total;
}

}  // namespace mhslab
