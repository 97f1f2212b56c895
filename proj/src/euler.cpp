#include "mhs/euler.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <map>
#include <stdexcept>

#include "mhs/sums.hpp"

namespace mhslab {

namespace {

// Cohen-Rodriguez Villegas-Zagier acceleration of sum_{k>=0} (-1)^k a(k).
HpReal crvz_alternating(const std::function<HpReal(long)>& a, long n_terms, long prec) {
    HpReal d = (HpReal::from_long(3, prec) + HpReal::from_long(8, prec).sqrt()).pow_int(n_terms);
    d = (d + HpReal::from_long(1, prec) / d) / HpReal::from_long(2, prec);
    HpReal b = -HpReal::from_long(1, prec);
    HpReal c = -d;
    HpReal s(prec);
    for (long k = 0; k < n_terms; ++k) {
        c = b - c;
        s += c * a(k);
        b = b * HpReal::from_long((k + n_terms), prec) * HpReal::from_long(k - n_terms, prec) /
            (HpReal::from_rational(rational(2 * k + 1, 2), prec) * HpReal::from_long(k + 1, prec));
    }
    return s / d;
}

long crvz_terms_for(long prec_bits) {
    // relative error ~ (3+sqrt 8)^-n; ln 2 / ln(3+sqrt 8) = 0.39321...
    return static_cast<long>(std::ceil(0.3933 * (prec_bits + 4))) + 8;
}

HpReal rounded_to(const HpReal& x, long prec) {
    HpReal r(prec);
    mpfr_set(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

}  // namespace

HpReal zeta_num(long s, long prec) {
    if (s < 2) throw std::invalid_argument("zeta_num requires s >= 2");
    const long pe = prec + 64;
    const long n = crvz_terms_for(pe);
    HpReal eta = crvz_alternating(
        [&](long k) { return HpReal::from_long(k + 1, pe).pow_int(-s); }, n, pe);
    HpReal denom = HpReal::from_rational(Rational(1) - pow2(1 - s), pe);
    return rounded_to(eta / denom, prec);
}

HpReal zeta_num_euler_maclaurin(long s, long prec) {
    if (s < 2) throw std::invalid_argument("zeta_num requires s >= 2");
    const long pe = prec + 64;
    long N = std::max<long>(16, pe / 2);
    for (int attempt = 0; attempt < 8; ++attempt, N *= 2) {
        HpReal tail(pe);
        HpReal threshold = HpReal::pow2(-(pe + 4), pe);
        Rational poch(s);   // s(s+1)...(s+2i-2)
        Integer fact(2);    // (2i)!
        HpReal npow = HpReal::from_long(N, pe).pow_int(-s - 1);
        HpReal ninv2 = HpReal::from_long(N, pe).pow_int(-2);
        bool small_enough = false;
        for (long i = 1; i <= 120; ++i) {
            Rational coef = bernoulli(2 * i) / Rational(fact) * poch;
            HpReal term = HpReal::from_rational(coef, pe) * npow;
            tail += term;
            if (term.abs() < threshold) {
                small_enough = true;
                break;
            }
            poch *= Rational((s + 2 * i - 1)) * Rational((s + 2 * i));
            fact *= Integer(2 * i + 1) * Integer(2 * i + 2);
            npow = npow * ninv2;
        }
        if (!small_enough) continue;
        HpReal sum(pe);
        for (long k = 1; k <= N; ++k) sum += HpReal::from_long(k, pe).pow_int(-s);
        sum += HpReal::from_long(N, pe).pow_int(1 - s) / HpReal::from_long(s - 1, pe);
        sum -= HpReal::from_long(N, pe).pow_int(-s) / HpReal::from_long(2, pe);
        return rounded_to(sum + tail, prec);
    }
    throw std::runtime_error("zeta_num_euler_maclaurin: tail did not converge");
}

namespace {

void validate_slots(long s1, long s2) {
    if (s1 == 0 || s2 == 0) throw std::invalid_argument("euler sum: slots must be nonzero");
    if ((s1 < 0) == (s2 < 0))
        throw std::invalid_argument("euler sum: exactly one slot must be negative");
}

// closed form for H(m, -n), m >= 1, n >= 2, m + n odd
ZetaExpr outer_alternating_symbolic(long m, long n) {
    const long w = m + n;
    ZetaExpr two_h = zeta_bar(w);
    // (1 - (-1)^m) zeta(m) zeta_bar(n); at m = 1 the formula's zeta(1) factor
    // is regularized to 0 (validated numerically at (1,2), (1,4), (1,6))
    if (m % 2 == 1 && m >= 3)
        two_h = two_h - (ZetaExpr::zeta(static_cast<int>(m)) * zeta_bar(n)).scaled(Rational(2));
    const Rational sgn((m % 2 != 0) ? -1 : 1);
    for (long r = 1; r <= (w - 1) / 2; ++r) {
        Rational c1(binomial(2 * r, n - 1));
        Rational c2(binomial(2 * r, m - 1));
        if (c1 != 0)
            two_h = two_h + (zeta_bar(2 * r + 1) * zeta_bar(w - 2 * r - 1)).scaled(2 * sgn * c1);
        if (c2 != 0)
            two_h = two_h -
                    (ZetaExpr::zeta(static_cast<int>(2 * r + 1)) * zeta_bar(w - 2 * r - 1))
                        .scaled(2 * sgn * c2);
    }
    return two_h.scaled(rational(1, 2));
}

// boundary closed form for H(m, -1), m even:
// -((m-2) 2^{m-1} + 1)/2^m zeta(m+1) + sum_{i=1}^{m/2} zeta_bar(2i) zeta_bar(m+1-2i)
ZetaExpr outer_alternating_boundary(long m) {
    if (m > 10)
        throw std::invalid_argument("euler sum: H(m,-1) closed form tabulated up to weight 11");
    Rational lead = -Rational((m - 2)) * pow2(m - 1) - Rational(1);
    lead *= pow2(-m);
    ZetaExpr e = ZetaExpr::zeta(static_cast<int>(m + 1)).scaled(lead);
    for (long i = 1; i <= m / 2; ++i)
        e = e + zeta_bar(2 * i) * zeta_bar(m + 1 - 2 * i);
    return e;
}

}  // namespace

ZetaExpr euler_sum_symbolic(long s1, long s2) {
    validate_slots(s1, s2);
    const long w = std::labs(s1) + std::labs(s2);
    if (w % 2 == 0)
        throw std::invalid_argument("euler sum closed forms require odd weight");
    if (s2 < 0) {
        const long m = s1, n = -s2;
        if (n >= 2) return outer_alternating_symbolic(m, n);
        return outer_alternating_boundary(m);  // n = 1 forces m even by parity
    }
    // H(-n, m) via the stuffle reflection: H(-n,m) = -H(m,-n) - zeta(m) zeta_bar(n) + zeta_bar(w)
    const long n = -s1, m = s2;
    if (m < 2) throw std::domain_error("euler sum: H(-n, 1) diverges");
    ZetaExpr h = euler_sum_symbolic(m, -n);
    return zeta_bar(w) - h - ZetaExpr::zeta(static_cast<int>(m)) * zeta_bar(n);
}

namespace {

// CRVZ on a prefix-computable alternating series with a dual-run error estimate
EulerNumeric accelerated_sum(const std::vector<HpReal>& terms, long n_terms, long prec) {
    auto gen = [&](long k) { return terms[static_cast<std::size_t>(k)]; };
    HpReal full = crvz_alternating(gen, n_terms, prec);
    HpReal shorter = crvz_alternating(gen, n_terms - 8, prec);
    return EulerNumeric{full, (full - shorter).abs(), n_terms};
}

}  // namespace

EulerNumeric euler_sum_numeric(long s1, long s2, long prec, long terms) {
    validate_slots(s1, s2);
    if (s1 < 0 && s2 == 1) throw std::domain_error("euler sum: H(-n, 1) diverges");
    const long pe = prec + 64;
    long n_acc = terms > 0 ? terms : std::max<long>(64, crvz_terms_for(pe) + 16);
    if (n_acc < 16) throw std::invalid_argument("euler sum: too few acceleration terms");

    if (s2 < 0) {
        // H(m,-n) = sum_{k>=2} (-1)^k H_{k-1}(m)/k^n, shifted to k = i + 2
        const long m = s1, n = -s2;
        std::vector<HpReal> a;
        a.reserve(static_cast<std::size_t>(n_acc));
        HpReal h(pe);  // H_{k-1}(m)
        for (long i = 0; i < n_acc; ++i) {
            long k = i + 2;
            h += HpReal::from_long(k - 1, pe).pow_int(-m);
            a.push_back(h * HpReal::from_long(k, pe).pow_int(-n));
        }
        EulerNumeric out = accelerated_sum(a, n_acc, pe);
        out.value = rounded_to(out.value, prec);
        return out;
    }

    // H(-q, n) = sum_{k>=2} Abar_{k-1}(q)/k^n with Abar_t(q) = sum_{j<=t} (-1)^j/j^q.
    // Split off the limit Abar_inf = -eta(q): the remainder alternates and is
    // accelerated; the split costs ~q log2(k) cancellation bits, compensated
    // in the working precision.
    const long q = -s1, n = s2;
    const long pw = pe + 32 + q * (64 - __builtin_clzl(static_cast<unsigned long>(n_acc + 2)));
    HpReal abar_inf =
        q == 1 ? -HpReal::ln2(pw)
               : -HpReal::from_rational(Rational(1) - pow2(1 - q), pw) * rounded_to(zeta_num(q, pw), pw);
    std::vector<HpReal> rho;  // rho_{i+2} / (i+2)^n, see below
    rho.reserve(static_cast<std::size_t>(n_acc));
    HpReal abar(pw);
    for (long i = 0; i < n_acc; ++i) {
        long k = i + 2;
        long j = k - 1;
        HpReal t = HpReal::from_long(j, pw).pow_int(-q);
        abar += (j % 2 != 0) ? -t : t;
        // Abar_{k-1} - Abar_inf = -(-1)^k rho_k with rho_k > 0
        HpReal rho_k = (abar_inf - abar).abs();
        rho.push_back(rho_k * HpReal::from_long(k, pw).pow_int(-n));
    }
    // sum_{k>=2} (Abar_{k-1}-Abar_inf)/k^n = -sum_{i>=0} (-1)^i rho_{i+2}/(i+2)^n
    EulerNumeric out = accelerated_sum(rho, n_acc, pw);
    HpReal zn = zeta_num(n, pe);
    HpReal value = -out.value + abar_inf * (zn - HpReal::from_long(1, pe));
    return EulerNumeric{rounded_to(value, prec), rounded_to(out.error_estimate, prec),
                        out.terms_used};
}

ZetaExpr r_infty_symbolic(long a, long b) {
    if (a < 1) throw std::invalid_argument("r_infty requires a >= 1");
    if (b < 2) throw std::invalid_argument("r_infty requires b >= 2 (convergence)");
    ZetaExpr total;
    for (long r = 1; r <= a + b - 1; ++r) {
        Rational coef = Rational(binomial(2 * r, 2 * b - 2)) - Rational(binomial(2 * r, 2 * a - 1));
        if (coef == 0) continue;
        coef *= Rational(4) * (Rational(1) - pow2(-(2 * r + 1)));
        total = total +
                (ZetaExpr::zeta(static_cast<int>(2 * r + 1)) * zeta_bar(2 * (a + b - 1 - r)))
                    .scaled(coef);
    }
    return total;
}

HpReal zeta_expr_eval(const ZetaExpr& e, long prec) {
    const long pe = prec + 32;
    std::map<int, HpReal> atom_values;
    auto atom = [&](int k) -> const HpReal& {
        auto it = atom_values.find(k);
        if (it == atom_values.end())
            it = atom_values.emplace(k, k == 1 ? HpReal::ln2(pe) : zeta_num(k, pe)).first;
        return it->second;
    };
    HpReal total(pe);
    for (const auto& [mono, coef] : e.terms()) {
        HpReal t = HpReal::from_rational(coef, pe);
        for (int k : mono) t *= atom(k);
        total += t;
    }
    return rounded_to(total, prec);
}

ExtrapolationResult r_partial_extrapolate(long a, long b, long max_n, long prec) {
    if (b < 2) throw std::invalid_argument("r_partial_extrapolate requires b >= 2");
    if (max_n < 64) throw std::invalid_argument("r_partial_extrapolate requires max_n >= 64");
    const long pe = prec + 32;

    ExtrapolationResult result{HpReal(prec), HpReal(prec), 0.0, false, {}, {}};
    for (long n = max_n; n >= 64; n /= 2) result.ladder.push_back(n);
    std::sort(result.ladder.begin(), result.ladder.end());

    std::vector<HpReal> vals;
    for (long n : result.ladder) vals.push_back(HpReal::from_rational(r_sum(n, a, b), pe));

    if (vals.size() >= 3) {
        HpReal d1 = vals[vals.size() - 2] - vals[vals.size() - 3];
        HpReal d2 = vals[vals.size() - 1] - vals[vals.size() - 2];
        if (!d2.is_zero())
            result.fitted_exponent = std::log2(std::fabs((d1 / d2).to_double()));
    }

    // halving ladder; tail (c1 ln n + c0)/n^p needs each order eliminated twice
    std::vector<HpReal> col = vals;
    HpReal est = col.back();
    long order = 1;
    int hits_at_order = 0;
    while (col.size() > 1) {
        HpReal weight = HpReal::pow2(order, pe);
        std::vector<HpReal> next;
        for (std::size_t i = 0; i + 1 < col.size(); ++i)
            next.push_back((weight * col[i + 1] - col[i]) /
                           (weight - HpReal::from_long(1, pe)));
        col = std::move(next);
        if (++hits_at_order == 2) {
            ++order;
            hits_at_order = 0;
        }
        HpReal new_est = col.back();
        result.residuals.push_back((new_est - est).abs().to_double());
        est = new_est;
    }
    result.value = rounded_to(est, prec);
    result.error_estimate = result.residuals.empty()
                                ? HpReal::from_long(1, prec)
                                : HpReal::from_double(result.residuals.back(), prec);
    result.converged = result.residuals.size() >= 2 &&
                       result.residuals.back() <= result.residuals.front();
    return result;
}

}  // namespace mhslab
