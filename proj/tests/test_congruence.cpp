#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mhs/congruence.hpp"
#include "mhs/report.hpp"
#include "mhs/sums.hpp"

using namespace mhslab;

TEST_CASE("wolstenholme instances") {
    auto rep = wolstenholme_check(5, 1);
    CHECK(rep.pass);
    CHECK(rep.lhs == rational(25, 12));  // H_4(1)
    CHECK(rep.delta_valuation == PadicValuation::finite(2));
    CHECK(wolstenholme_check(7, 2).pass);
    CHECK(wolstenholme_check(5, -2).pass);
    CHECK_THROWS_AS(wolstenholme_check(5, -1), std::invalid_argument);  // odd negative
    CHECK_THROWS_AS(wolstenholme_check(3, 2), std::invalid_argument);   // p too small
    CHECK_THROWS_AS(wolstenholme_check(9, 1), std::invalid_argument);   // not prime
}

TEST_CASE("congruence i examples") {
    CHECK(cong_i(7, 1, 1).pass);
    CHECK(cong_i(11, 1, 3).pass);
    CHECK(cong_i(7, 2, 2).pass);
    // both orders checked independently; rhs is not symmetric
    CHECK(cong_i(11, 3, 1).pass);
    CHECK_THROWS_AS(cong_i(7, 1, 2), std::invalid_argument);  // odd weight
    CHECK_THROWS_AS(cong_i(5, 2, 2), std::invalid_argument);  // p <= w + 1
}

TEST_CASE("congruence ii examples") {
    CHECK(cong_ii(7, 2, 2).pass);
    CHECK(cong_ii(11, 2, 4).pass);
    CHECK(cong_ii(11, 4, 2).pass);
    CHECK_THROWS_AS(cong_ii(11, 1, 3), std::invalid_argument);  // odd m
}

TEST_CASE("congruence iii examples") {
    CHECK(cong_iii(7, 1, 2).pass);
    CHECK(cong_iii(11, 2, 1).pass);
    CHECK(cong_iii(11, 1, 4).pass);
    CHECK(cong_iii(5, 1, 2).pass);                               // p = w + 2 boundary
    CHECK_THROWS_AS(cong_iii(5, 2, 3), std::invalid_argument);   // p <= w + 1
    CHECK_THROWS_AS(cong_iii(11, 2, 2), std::invalid_argument);  // even weight
}

TEST_CASE("congruence iv examples") {
    CHECK(cong_iv(7, 2, 1).pass);
    CHECK(cong_iv(11, 2, 3).pass);
    CHECK(cong_iv(11, 4, 1).pass);
    CHECK_THROWS_AS(cong_iv(11, 3, 2), std::invalid_argument);  // parity wrong
}

TEST_CASE("lemma examples") {
    CHECK(lemma_check(7, 2, 1, 2).pass);
    CHECK(lemma_check(7, 2, 2, 1).pass);
    CHECK(lemma_check(11, 4, 1, 2).pass);
    CHECK_THROWS_AS(lemma_check(7, 3, 1, 2), std::invalid_argument);  // m odd
    CHECK_THROWS_AS(lemma_check(7, 2, 1, 1), std::invalid_argument);  // n + r even
    CHECK_THROWS_AS(lemma_check(5, 2, 4, 1), std::invalid_argument);  // p too small
}

TEST_CASE("theorem 4 half-range examples") {
    CHECK(thm4_half(7, 1, 1).pass);
    CHECK(thm4_half(11, 1, 2).pass);
    CHECK(thm4_half(13, 2, 1).pass);
    CHECK_THROWS_AS(thm4_half(3, 1, 1), std::invalid_argument);  // p <= 2a+2b-1
}

TEST_CASE("theorem 4 full-range examples") {
    auto rep = thm4_full(7, 1, 1);
    CHECK(rep.pass);
    CHECK(rep.lhs_valuation.has_value());
    CHECK(thm4_full(11, 1, 2).pass);
    CHECK(thm4_full(11, 2, 1).pass);
}

TEST_CASE("small prime sweep of i and iii") {
    for (long p : {7L, 11L, 13L, 17L, 19L, 23L}) {
        if (p > 3 + 1) {
            CHECK(cong_i(p, 1, 1).pass);
            CHECK(cong_i(p, 1, 3).pass);
            CHECK(cong_iii(p, 1, 2).pass);
        }
    }
}

TEST_CASE("report fields") {
    auto rep = cong_i(7, 1, 1);
    CHECK(rep.check == "i");
    CHECK(rep.p == 7);
    CHECK(rep.params.at("m") == 1);
    CHECK(rep.required == 2);
    CHECK(rep.note.empty());

    std::string json = format_report(rep, OutputFormat::json);
    CHECK(json.find("\"check\":\"i\"") != std::string::npos);
    CHECK(json.find("\"pass\":true") != std::string::npos);
    CHECK(json.find("\"required\":2") != std::string::npos);
}
