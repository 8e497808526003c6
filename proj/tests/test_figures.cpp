#include "doctest.h"

#include "semiwalk/cayley.hpp"
#include "semiwalk/expansions.hpp"
#include "semiwalk/families.hpp"
#include "semiwalk/stationary.hpp"

using namespace semiwalk;

TEST_CASE("vertex counts of small expansions") {
    CHECK(karnofsky_rhodes(klein()).graph.size() == 9);
    CHECK(mccammond(karnofsky_rhodes(klein()).graph).graph.size() == 15);
    CHECK(right_cayley(tsetlin(3)).size() == 8);
    CHECK(karnofsky_rhodes(tsetlin(3)).graph.size() == 16);
    CHECK(karnofsky_rhodes(flipflop()).graph.size() == 4);
}

TEST_CASE("B(2) normal forms, values and expressions") {
    const Semigroup S = rees_B(2);
    CHECK(S.size() == 5);
    StationaryOptions opt;
    opt.expressions = true;
    const StationaryResult R = stationary(S, uniform_probabilities(2), opt);
    REQUIRE(R.normal_forms.size() == 4);
    CHECK(R.normal_forms[0].word == "aa");
    CHECK(R.normal_forms[1].word == "abb");
    CHECK(R.normal_forms[2].word == "baa");
    CHECK(R.normal_forms[3].word == "bb");
    CHECK(R.normal_forms[0].expr == "a(ba)⋆a");
    CHECK(R.normal_forms[1].expr == "ab(ab)⋆b");
    CHECK(R.normal_forms[2].expr == "ba(ba)⋆a");
    CHECK(R.normal_forms[3].expr == "b(ab)⋆b");
    CHECK(R.kr.at("aa") == Rational(1, 3));
    CHECK(R.kr.at("abb") == Rational(1, 6));
    CHECK(R.kr.at("baa") == Rational(1, 6));
    CHECK(R.kr.at("bb") == Rational(1, 3));
}
