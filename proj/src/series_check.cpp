#include "mhs/series_check.hpp"

#include "mhs/signature.hpp"
#include "mhs/sums.hpp"

namespace mhslab {

namespace {

Rational neg_pow(long k) { return Rational((k % 2 != 0) ? -1 : 1); }

Rational kpow_inv(long k, long e) {
    Integer kp;
    mpz_ui_pow_ui(kp.get_mpz_t(), static_cast<unsigned long>(k),
                  static_cast<unsigned long>(e));
    Rational q(1, kp);
    q.canonicalize();
    return q;
}

// (1 - v^2/j^2)^-1 where v is z (axis 0) or w (axis 1)
BiSeries inv_one_minus_sq(long j, bool w_axis, long R, long D) {
    BiSeries poly = BiSeries::constant(1, R, D) -
                    BiSeries::monomial(rational(1, j * j), w_axis ? 0 : 2, w_axis ? 2 : 0, R, D);
    return poly.inverse();
}

// (1 + v/j) / (1 - v/j)
BiSeries ratio_factor(long j, bool w_axis, long R, long D) {
    long i = w_axis ? 0 : 1, jj = w_axis ? 1 : 0;
    BiSeries num = BiSeries::constant(1, R, D) + BiSeries::monomial(rational(1, j), i, jj, R, D);
    BiSeries den = BiSeries::constant(1, R, D) - BiSeries::monomial(rational(1, j), i, jj, R, D);
    return num * den.inverse();
}

}  // namespace

Rational gf2_lhs(long n, long r, long d) {
    if (r < 1 || d < 1) throw std::invalid_argument("gf2 requires r >= 1 and d >= 1");
    if (n < 0) n = 0;
    std::vector<Rational> h = mhs_prefix(n, Signature{d});
    Rational sign_rd = neg_pow(r + d);
    Rational acc(0);
    for (long k = 1; k <= n; ++k)
        acc += neg_pow(k) * kpow_inv(k, r) * binomial_ratio(n, k) *
               (h[k] - sign_rd * h[k - 1]);
    return acc;
}

Rational gf2_rhs(long n, long r, long d, long pad) {
    if (r < 1 || d < 1) throw std::invalid_argument("gf2 requires r >= 1 and d >= 1");
    if (pad < 0) throw std::invalid_argument("gf2: pad must be >= 0");
    if (n < 0) n = 0;
    const long R = r - 1 + pad, D = d + pad;
    BiSeries total(R, D);
    for (long k = 1; k <= n; ++k) {
        BiSeries prod = BiSeries::constant(1, R, D);
        for (long j = k; j <= n; ++j) prod = prod * inv_one_minus_sq(j, false, R, D);
        for (long j = 1; j <= k; ++j) prod = prod * inv_one_minus_sq(j, true, R, D);
        BiSeries bracket =
            BiSeries::monomial(rational(1, 2 * (2 * k - 1) * k), 0, 0, R, D) +
            BiSeries::monomial(-rational(1, 2 * k * k), 0, 1, R, D) +
            BiSeries::monomial(-rational(1, 2 * k * k), 1, 0, R, D) +
            BiSeries::monomial(-rational(1, (2 * k - 1) * k * k), 0, 2, R, D) +
            BiSeries::monomial(-rational(1, 2 * k * k * k), 1, 1, R, D);
        total = total + prod * bracket;
    }
    return total.coeff(r - 1, d);
}

bool thm1_series_check(long n, long r, long d, long pad) {
    if (n < 1 || r < 1 || d < 1)
        throw std::invalid_argument("thm1 requires n, r, d >= 1");
    if (pad < 0) throw std::invalid_argument("thm1: pad must be >= 0");
    const long R = r + pad, D = d - 1 + pad;

    BiSeries total(R, D);
    for (long k = 1; k <= n; ++k) {
        // z / (1 - z/k) * prod_{j=k+1}^n (1+z/j)/(1-z/j)
        BiSeries zpart =
            BiSeries::monomial(1, 1, 0, R, D) *
            (BiSeries::constant(1, R, D) - BiSeries::monomial(rational(1, k), 1, 0, R, D)).inverse();
        for (long j = k + 1; j <= n; ++j) zpart = zpart * ratio_factor(j, false, R, D);
        // w / (1 - w/k) * prod_{j=1}^{k-1} (1+w/j)/(1-w/j), weighted by 1/k^3
        BiSeries wpart =
            BiSeries::monomial(1, 0, 1, R, D) *
            (BiSeries::constant(1, R, D) - BiSeries::monomial(rational(1, k), 0, 1, R, D)).inverse();
        for (long j = 1; j < k; ++j) wpart = wpart * ratio_factor(j, true, R, D);
        BiSeries inner = BiSeries::constant(neg_pow(k) * kpow_inv(k, 2), R, D) -
                         wpart.scaled(kpow_inv(k, 3));
        total = total + zpart * inner;
    }
    Rational extracted = Rational(2) * total.coeff(r, d - 1);

    std::vector<Rational> h = mhs_prefix(n, Signature{d});
    Rational binom_sum(0);
    for (long k = 1; k <= n; ++k)
        binom_sum += neg_pow(k) * kpow_inv(k, r) *
                     Rational(binomial(n, k) * binomial(n + k, k)) * h[k];
    return extracted == binom_sum;
}

SpecializationResult specialization_checks(long n, long a, long b) {
    if (n < 1 || a < 1 || b < 1)
        throw std::invalid_argument("specialization_checks requires n, a, b >= 1");
    Rational even_lhs = gf2_rhs(n, 2 * b - 1, 1);
    Rational even_rhs = -rational(1, 2) * s_sum(1, n, repeat_block(Signature{2}, b));

    Rational odd_lhs = gf2_rhs(n, 2 * b, 2 * a + 1);
    std::vector<long> sig = repeat_block(Signature{2}, a).entries();
    sig.push_back(3);
    for (long i = 0; i < b - 1; ++i) sig.push_back(2);
    Rational odd_rhs = -rational(1, 2) * s_sum(1, n, Signature(sig));

    return SpecializationResult{even_lhs == even_rhs, odd_lhs == odd_rhs};
}

}  // namespace mhslab
