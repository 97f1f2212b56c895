#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mhs/identities.hpp"
#include "mhs/report.hpp"
#include "mhs/sums.hpp"

using namespace mhslab;

TEST_CASE("tag names round-trip") {
    for (auto id : {IdentityId::I5, IdentityId::I6, IdentityId::I7, IdentityId::HHT_EVEN,
                    IdentityId::HHT_ODD, IdentityId::HHT_ODD_H, IdentityId::HHT_EVEN_H,
                    IdentityId::C1, IdentityId::C2, IdentityId::C3})
        CHECK(parse_identity(identity_name(id)) == id);
    CHECK_FALSE(parse_identity("i9").has_value());
}

TEST_CASE("hand-expanded base cases") {
    CHECK(identity_lhs(IdentityId::I5, {{"n", 1}}) == rational(-2));
    CHECK(identity_rhs(IdentityId::I5, {{"n", 1}}) == rational(-2));
    CHECK(identity_lhs(IdentityId::I7, {{"n", 1}, {"r", 1}}) == rational(-2));
    CHECK(identity_rhs(IdentityId::I7, {{"n", 1}, {"r", 1}}) == rational(-2));
    // H_0 = 0 makes both sides of c3 vanish at n = 1
    CHECK(identity_lhs(IdentityId::C3, {{"n", 1}, {"a", 2}, {"b", 3}}) == 0);
    CHECK(identity_rhs(IdentityId::C3, {{"n", 1}, {"a", 2}, {"b", 3}}) == 0);
}

TEST_CASE("verify reports") {
    auto rep = verify(IdentityId::I5, {{"n", 7}});
    CHECK(rep.equal);
    CHECK(rep.lhs == rep.rhs);
    auto rep2 = verify(IdentityId::C2, {{"n", 5}, {"r", 2}, {"d", 3}});
    CHECK(rep2.equal);
}

TEST_CASE("parameter constraints are named") {
    CHECK_THROWS_WITH_AS(identity_lhs(IdentityId::I6, {{"n", 4}, {"d", 1}}),
                         "i6 requires d >= 2", std::invalid_argument);
    CHECK_THROWS_AS(verify(IdentityId::C2, {{"n", 3}, {"r", 0}, {"d", 2}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(verify(IdentityId::I5, {{"n", 0}}), std::invalid_argument);
    CHECK_THROWS_AS(verify(IdentityId::I5, Params{}), std::invalid_argument);
}

TEST_CASE("small sweeps pass for every tag") {
    CHECK(sweep(IdentityId::I5, {{"n", {1, 10}}}).summary.all_passed);
    CHECK(sweep(IdentityId::I6, {{"n", {1, 6}}, {"d", {2, 4}}}).summary.all_passed);
    CHECK(sweep(IdentityId::I7, {{"n", {1, 6}}, {"r", {1, 3}}}).summary.all_passed);
    CHECK(sweep(IdentityId::HHT_EVEN, {{"n", {1, 8}}, {"b", {1, 3}}}).summary.all_passed);
    CHECK(sweep(IdentityId::HHT_ODD, {{"n", {1, 8}}, {"b", {1, 3}}}).summary.all_passed);
    CHECK(sweep(IdentityId::HHT_ODD_H, {{"n", {1, 5}}, {"a", {1, 2}}, {"b", {1, 2}}})
              .summary.all_passed);
    CHECK(sweep(IdentityId::HHT_EVEN_H, {{"n", {1, 5}}, {"a", {1, 2}}, {"b", {1, 2}}})
              .summary.all_passed);
    CHECK(sweep(IdentityId::C1, {{"n", {1, 6}}, {"r", {1, 3}}}).summary.all_passed);
    CHECK(sweep(IdentityId::C2, {{"n", {1, 5}}, {"r", {1, 2}}, {"d", {2, 3}}})
              .summary.all_passed);
    CHECK(sweep(IdentityId::C3, {{"n", {1, 6}}, {"a", {1, 2}}, {"b", {1, 2}}})
              .summary.all_passed);
}

TEST_CASE("sweep edge behavior") {
    auto empty = sweep(IdentityId::I5, {{"n", {5, 4}}});
    CHECK(empty.reports.empty());
    CHECK(empty.summary.all_passed);  // vacuous

    // constraint-violating points are skipped, not fatal
    auto mixed = sweep(IdentityId::I6, {{"n", {2, 3}}, {"d", {1, 2}}});
    CHECK(mixed.summary.skipped == 2);
    CHECK(mixed.summary.evaluated == 2);
    CHECK(mixed.summary.all_passed);

    // canonical order: n outermost
    auto pts = sweep_points(IdentityId::I7, {{"n", {1, 2}}, {"r", {1, 2}}});
    REQUIRE(pts.size() == 4);
    CHECK(pts[0] == Params{{"n", 1}, {"r", 1}});
    CHECK(pts[1] == Params{{"n", 1}, {"r", 2}});
    CHECK(pts[3] == Params{{"n", 2}, {"r", 2}});
}

TEST_CASE("parallel sweep matches serial") {
    auto serial = sweep(IdentityId::C3, {{"n", {1, 8}}, {"a", {1, 2}}, {"b", {1, 2}}},
                        Engine::fast, 1);
    auto parallel = sweep(IdentityId::C3, {{"n", {1, 8}}, {"a", {1, 2}}, {"b", {1, 2}}},
                          Engine::fast, 4);
    REQUIRE(serial.reports.size() == parallel.reports.size());
    for (std::size_t i = 0; i < serial.reports.size(); ++i) {
        CHECK(serial.reports[i].params == parallel.reports[i].params);
        CHECK(serial.reports[i].lhs == parallel.reports[i].lhs);
        CHECK(serial.reports[i].rhs == parallel.reports[i].rhs);
    }
}

TEST_CASE("i6 flips the last component, c1 the first (n = 2 regression)") {
    // i6 at d = 3: block (1,2) has compositions {(1,2), (3)}
    Rational lhs6 = identity_lhs(IdentityId::I6, {{"n", 2}, {"d", 3}});
    Rational right6 = identity_rhs(IdentityId::I6, {{"n", 2}, {"d", 3}});
    CHECK(lhs6 == right6);
    // last-component flip, spelled out
    Rational manual6 = -(Rational(4) * mhs(2, Signature{1, -2}) + Rational(2) * mhs(2, Signature{-3}));
    CHECK(right6 == manual6);
    // flipping the first component instead gives a different value
    Rational wrong6 = -(Rational(4) * mhs(2, Signature{-1, 2}) + Rational(2) * mhs(2, Signature{-3}));
    CHECK(right6 != wrong6);

    // c1 at r = 2: block (2,1) has compositions {(2,1), (3)}
    Rational lhs1 = identity_lhs(IdentityId::C1, {{"n", 2}, {"r", 2}});
    Rational right1 = identity_rhs(IdentityId::C1, {{"n", 2}, {"r", 2}});
    CHECK(lhs1 == right1);
    Rational manual1 = Rational(4) * mhs(2, Signature{-2, 1}) + Rational(2) * mhs(2, Signature{-3});
    CHECK(right1 == manual1);
    Rational wrong1 = Rational(4) * mhs(2, Signature{2, -1}) + Rational(2) * mhs(2, Signature{-3});
    CHECK(right1 != wrong1);
}

TEST_CASE("i6 at d = 2 degenerates to 2(-1)^(n-1) H_n(-2)") {
    for (long n = 1; n <= 8; ++n) {
        Rational want = Rational(n % 2 != 0 ? 2 : -2) * mhs(n, Signature{-2});
        CHECK(identity_rhs(IdentityId::I6, {{"n", n}, {"d", 2}}) == want);
    }
}

TEST_CASE("oracle engine substitution leaves reports unchanged") {
    for (auto id : {IdentityId::I6, IdentityId::I7, IdentityId::C1, IdentityId::C2}) {
        Params p{{"n", 4}};
        if (id == IdentityId::I6) p["d"] = 3;
        if (id == IdentityId::I7 || id == IdentityId::C1) p["r"] = 2;
        if (id == IdentityId::C2) { p["r"] = 2; p["d"] = 3; }
        auto fast = verify(id, p, Engine::fast);
        auto oracle = verify(id, p, Engine::oracle);
        CHECK(fast.lhs == oracle.lhs);
        CHECK(fast.rhs == oracle.rhs);
        CHECK(oracle.equal);
    }
    auto c3f = verify(IdentityId::C3, {{"n", 5}, {"a", 1}, {"b", 2}}, Engine::fast);
    auto c3o = verify(IdentityId::C3, {{"n", 5}, {"a", 1}, {"b", 2}}, Engine::oracle);
    CHECK(c3f.rhs == c3o.rhs);
}

TEST_CASE("report serialization") {
    auto rep = verify(IdentityId::I5, {{"n", 3}});
    CHECK(rep.lhs == rational(-11, 3));  // -12 + 45 - 110/3
    std::string json = format_report(rep, OutputFormat::json, false);
    CHECK(json ==
          R"({"identity":"i5","params":{"n":3},"lhs":"-11/3","rhs":"-11/3","equal":true,"elapsed_ms":0.0})");
    std::string tsv = format_report(rep, OutputFormat::tsv, false);
    CHECK(tsv == "i5\tn=3\t-11/3\t-11/3\ttrue\t0");
}
