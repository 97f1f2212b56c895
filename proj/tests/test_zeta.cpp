#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "mhs/euler.hpp"

using namespace mhslab;

namespace {

HpReal tol(const char* s, long prec = 320) { return HpReal::from_string(s, prec); }

ZetaExpr random_expr(std::mt19937& rng) {
    std::uniform_int_distribution<int> pick(0, 3), num(-5, 5), den(1, 5);
    ZetaExpr e = ZetaExpr::constant(rational(num(rng), den(rng)));
    for (int i = 0; i < 3; ++i) {
        ZetaExpr atom;
        switch (pick(rng)) {
            case 0: atom = ZetaExpr::zeta(2); break;
            case 1: atom = ZetaExpr::zeta(3); break;
            case 2: atom = ZetaExpr::ln2(); break;
            default: atom = ZetaExpr::constant(1); break;
        }
        e = e + atom.scaled(rational(num(rng), den(rng)));
    }
    return e;
}

}  // namespace

TEST_CASE("zeta(2) matches pi^2/6 to 50 digits") {
    HpReal z = zeta_num(2, 320);
    HpReal pi = HpReal::pi(320);
    HpReal want = pi * pi / HpReal::from_long(6, 320);
    CHECK((z - want).abs() < tol("1e-50"));
}

TEST_CASE("zeta approaches 1 from above") {
    HpReal prev = zeta_num(2, 128);
    for (long s = 3; s <= 20; ++s) {
        HpReal z = zeta_num(s, 128);
        CHECK(z < prev);
        CHECK(z > HpReal::from_long(1, 128));
        prev = z;
    }
    CHECK((zeta_num(20, 128) - HpReal::from_long(1, 128)) < HpReal::pow2(-19, 128));
}

TEST_CASE("two internal schemes agree to 40 digits") {
    for (long s : {2L, 3L, 5L, 8L, 13L})
        CHECK((zeta_num(s, 256) - zeta_num_euler_maclaurin(s, 256)).abs() < tol("1e-40"));
}

TEST_CASE("schemes agree with mpfr_zeta") {
    for (long s : {2L, 3L, 7L, 11L}) {
        HpReal ref(320);
        mpfr_zeta_ui(ref.raw(), static_cast<unsigned long>(s), MPFR_RNDN);
        CHECK((zeta_num(s, 320) - ref).abs() < tol("1e-70"));
        CHECK((zeta_num_euler_maclaurin(s, 320) - ref).abs() < tol("1e-70"));
    }
}

TEST_CASE("zeta_num domain") {
    CHECK_THROWS_AS(zeta_num(1), std::invalid_argument);
    CHECK_THROWS_AS(zeta_num_euler_maclaurin(0), std::invalid_argument);
}

TEST_CASE("zeta_bar") {
    CHECK(zeta_bar(0) == ZetaExpr::constant(rational(1, 2)));
    CHECK(zeta_bar(1) == ZetaExpr::ln2());
    CHECK(zeta_bar(2) == ZetaExpr::zeta(2).scaled(rational(1, 2)));
    CHECK(zeta_bar(5) == ZetaExpr::zeta(5).scaled(rational(15, 16)));
}

TEST_CASE("zeta expr algebra laws on random expressions") {
    std::mt19937 rng(65537);
    for (int i = 0; i < 50; ++i) {
        ZetaExpr a = random_expr(rng), b = random_expr(rng), c = random_expr(rng);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("serialization matches the pinned exotic sums") {
    CHECK(r_infty_symbolic(1, 2).str() == "31/8*zeta(5) - 7/4*zeta(3)*zeta(2)");
    CHECK(r_infty_symbolic(2, 2).str() ==
          "-635/64*zeta(7) + 49/16*zeta(3)*zeta(4) + 31/8*zeta(5)*zeta(2)");
    CHECK(ZetaExpr().str() == "0");
    CHECK((ZetaExpr::ln2() * ZetaExpr::ln2()).scaled(rational(3, 7)).str() == "3/7*ln2^2");
}

TEST_CASE("exotic sums as expressions") {
    ZetaExpr want12 = ZetaExpr::zeta(5).scaled(rational(31, 8)) -
                      (ZetaExpr::zeta(3) * ZetaExpr::zeta(2)).scaled(rational(7, 4));
    CHECK(r_infty_symbolic(1, 2) == want12);
    ZetaExpr want22 = ZetaExpr::zeta(7).scaled(rational(-635, 64)) +
                      (ZetaExpr::zeta(3) * ZetaExpr::zeta(4)).scaled(rational(49, 16)) +
                      (ZetaExpr::zeta(5) * ZetaExpr::zeta(2)).scaled(rational(31, 8));
    CHECK(r_infty_symbolic(2, 2) == want22);
    CHECK_THROWS_AS(r_infty_symbolic(1, 1), std::invalid_argument);
}

TEST_CASE("r_infty equals the euler-sum combination") {
    for (long a = 1; a <= 3; ++a)
        for (long b = 2; b <= 3; ++b) {
            ZetaExpr via_euler = euler_sum_symbolic(2 * a, -(2 * b - 1)).scaled(2) -
                                 euler_sum_symbolic(-2 * a, 2 * b - 1).scaled(2);
            CHECK(r_infty_symbolic(a, b) == via_euler);
        }
}

TEST_CASE("reflection identity holds as expressions") {
    for (long w : {3L, 5L, 7L, 9L})
        for (long m = 2; m < w; ++m) {
            long n = w - m;
            ZetaExpr residue = euler_sum_symbolic(m, -n).scaled(2) +
                               euler_sum_symbolic(-n, m).scaled(2) +
                               (ZetaExpr::zeta(m) * zeta_bar(n)).scaled(2) -
                               zeta_bar(w).scaled(2);
            CHECK(residue.is_zero());
        }
}

TEST_CASE("euler sum argument validation") {
    CHECK_THROWS_AS(euler_sum_symbolic(2, 3), std::invalid_argument);    // no alternation
    CHECK_THROWS_AS(euler_sum_symbolic(-2, -3), std::invalid_argument);  // double alternation
    CHECK_THROWS_AS(euler_sum_symbolic(2, -2), std::invalid_argument);   // even weight
    CHECK_THROWS_AS(euler_sum_symbolic(-2, 1), std::domain_error);       // divergent
    CHECK_THROWS_AS(euler_sum_numeric(-1, 1), std::domain_error);
    CHECK_THROWS_AS(euler_sum_numeric(-2, 1), std::domain_error);
    CHECK_THROWS_AS(euler_sum_numeric(0, 1), std::invalid_argument);
}

TEST_CASE("numeric vs symbolic at (2,-1) to 1e-30") {
    HpReal sym = zeta_expr_eval(euler_sum_symbolic(2, -1), 256);
    EulerNumeric num = euler_sum_numeric(2, -1, 256);
    CHECK((sym - num.value).abs() < tol("1e-30", 256));
}

TEST_CASE("numeric vs symbolic across the boundary closed forms") {
    for (long m : {2L, 4L, 6L, 8L, 10L}) {
        HpReal sym = zeta_expr_eval(euler_sum_symbolic(m, -1), 256);
        EulerNumeric num = euler_sum_numeric(m, -1, 256);
        CHECK((sym - num.value).abs() < tol("1e-25", 256));
    }
    CHECK_THROWS_AS(euler_sum_symbolic(12, -1), std::invalid_argument);  // weight cap
}

TEST_CASE("numeric vs symbolic for m = 1 rows") {
    for (long n : {2L, 4L, 6L}) {
        HpReal sym = zeta_expr_eval(euler_sum_symbolic(1, -n), 256);
        EulerNumeric num = euler_sum_numeric(1, -n, 256);
        CHECK((sym - num.value).abs() < tol("1e-25", 256));
    }
}

TEST_CASE("numeric vs symbolic for inner-alternating sums") {
    for (auto [s1, s2] : std::vector<std::pair<long, long>>{{-2, 3}, {-1, 2}, {-3, 4}, {-4, 3}}) {
        HpReal sym = zeta_expr_eval(euler_sum_symbolic(s1, s2), 256);
        EulerNumeric num = euler_sum_numeric(s1, s2, 256);
        CHECK((sym - num.value).abs() < tol("1e-25", 256));
    }
}

TEST_CASE("numeric error estimate is honest at (2,-1)") {
    EulerNumeric num = euler_sum_numeric(2, -1, 256);
    HpReal sym = zeta_expr_eval(euler_sum_symbolic(2, -1), 256);
    CHECK((sym - num.value).abs() <= num.error_estimate + tol("1e-40", 256));
}

TEST_CASE("zeta_expr_eval basics") {
    CHECK((zeta_expr_eval(ZetaExpr::zeta(2), 256) - zeta_num(2, 256)).abs() < tol("1e-70", 256));
    CHECK((zeta_expr_eval(ZetaExpr::constant(rational(1, 2)), 256) -
           HpReal::from_rational(rational(1, 2), 256))
              .is_zero());
}

TEST_CASE("extrapolation ladder converges with a visible exponent") {
    auto res = r_partial_extrapolate(1, 2, 512, 192);
    HpReal sym = zeta_expr_eval(r_infty_symbolic(1, 2), 192);
    CHECK((res.value - sym).abs() < tol("1e-5", 192));
    CHECK(res.converged);
    CHECK(res.fitted_exponent > 0.5);
    CHECK(res.fitted_exponent < 1.5);
    CHECK(res.ladder.front() == 64);
    CHECK(res.ladder.back() == 512);
    CHECK_THROWS_AS(r_partial_extrapolate(1, 1, 512), std::invalid_argument);
    CHECK_THROWS_AS(r_partial_extrapolate(1, 2, 32), std::invalid_argument);
}
