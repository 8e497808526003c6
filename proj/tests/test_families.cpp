#include "doctest.h"
#include "fixtures.hpp"

#include "semiwalk/expansions.hpp"
#include "semiwalk/families.hpp"

#include <set>

using namespace semiwalk;

namespace {

void check_against_closed_form(const std::string& spec) {
    const Family F = make_family(spec);
    REQUIRE(F.closed_form);
    for (const auto& x : testing_support::probability_vectors(F.semigroup.num_generators())) {
        const Distribution got = family_distribution(F, x);
        const Distribution want = F.closed_form(x);
        INFO(spec);
        CHECK(normalization_check(got));
        CHECK(normalization_check(want));
        std::set<std::string> keys(want.keys.begin(), want.keys.end());
        for (const auto& k : got.keys) keys.insert(k);
        for (const auto& k : keys) {
            INFO(k);
            CHECK(got.at(k) == want.at(k));
        }
    }
}

}  // namespace

TEST_CASE("pipeline matches closed forms") {
    for (const char* spec : {"tsetlin:2", "tsetlin:3", "tsetlin:4", "signed_tsetlin:1", "signed_tsetlin:2",
                             "signed_tsetlin:3", "edge_flip_line:2", "edge_flip_line:3", "rees_B:2", "rees_B:3",
                             "rees_B:4", "rees_zp:2,2", "rees_zp:3,2", "rees_zp:2,3", "rees_zp:3,3", "rees_general",
                             "klein", "flipflop", "z2x01", "z2x01_quotient", "burnside_straightline:1",
                             "burnside_straightline:2", "burnside_straightline:3", "burnside_straightline:4"})
        check_against_closed_form(spec);
}

TEST_CASE("towers normalize") {
    for (const char* spec : {"bar_tower:0", "bar_tower:1", "bar_tower:2", "flat_tower:0", "flat_tower:1", "flat_tower:2"}) {
        const Family F = make_family(spec);
        INFO(spec);
        for (const auto& x : testing_support::probability_vectors(F.semigroup.num_generators()))
            CHECK(normalization_check(stationary(F.semigroup, x).kr));
    }
}

TEST_CASE("R-trivial product formula") {
    for (const Semigroup& S : {tsetlin(3), signed_tsetlin(2), flipflop(), flat_tower(1)}) {
        if (!is_r_trivial(S)) continue;
        for (const auto& x : testing_support::probability_vectors(S.num_generators())) {
            const Distribution got = stationary(S, x).kr;
            const Distribution want = r_trivial_closed_form(S, x);
            CHECK(got.keys == want.keys);
            CHECK(got.values == want.values);
        }
    }
    CHECK(is_r_trivial(tsetlin(3)));
    CHECK_FALSE(is_r_trivial(rees_B(2)));
}

TEST_CASE("edge flipping on a line, n = 2 values") {
    const Family F = make_family("edge_flip_line:2");
    const std::vector<Rational> x{Rational(1, 3), Rational(2, 3)};
    const Distribution d = family_distribution(F, edge_flip_probabilities(x, Rational(1, 2)));
    CHECK(d.at("000") == Rational(1, 4));
    CHECK(d.at("111") == Rational(1, 4));
    CHECK(d.at("001") == x[0] / 4);
    CHECK(d.at("110") == x[0] / 4);
    CHECK(d.at("010") == 0);
    CHECK(d.at("101") == 0);
    CHECK(d.at("011") == x[1] / 4);
    CHECK(d.at("100") == x[1] / 4);
    CHECK(d.contains("010"));
    CHECK(edge_flip_state(3, Word{0, 3, 4}) == "0010");
}

TEST_CASE("stability flags per family") {
    CHECK(is_mc_stable(rees_B(2)));
    CHECK(is_mc_stable(tsetlin(3)));
    CHECK_FALSE(is_mc_stable(z2x01()));
    CHECK(is_mc_stable(flipflop()));
    CHECK_FALSE(is_stable1(flipflop()));
    CHECK(is_stable1(karnofsky_rhodes(tsetlin(3)).semigroup()));
    CHECK_FALSE(is_stable1(klein()));
    CHECK(is_mc_stable(bar(karnofsky_rhodes(tsetlin(2)).semigroup())));
    CHECK(is_mc_stable(flat(tsetlin(2))));
    CHECK(is_stable1(karnofsky_rhodes(burnside_straightline(3)).semigroup()));
    CHECK_FALSE(is_mc_stable(counterexample()));
}

TEST_CASE("family spec parsing") {
    CHECK(make_family("rees_zp:2,2").name == "rees_zp:2,2");
    CHECK(make_family("bar_tower").name == "bar_tower:1");
    CHECK_THROWS_AS(make_family("nope:3"), Error);
    CHECK_THROWS_AS(make_family("tsetlin"), Error);
    CHECK_THROWS_AS(make_family("tsetlin:x"), Error);
    CHECK_THROWS_AS(make_family("rees_zp:2,2,2"), Error);
}

TEST_CASE("Mc stability agrees with Mc∘KR being a right Cayley graph") {
    for (const char* spec : {"tsetlin:3", "signed_tsetlin:2", "edge_flip_line:2", "rees_B:2", "rees_B:3", "rees_zp:2,2",
                             "rees_general", "klein", "flipflop", "z2x01", "z2x01_quotient", "burnside_straightline:2",
                             "bar_tower:1", "flat_tower:1", "counterexample"}) {
        const Semigroup S = make_family(spec).semigroup;
        INFO(spec);
        CHECK(is_mc_stable(S) == is_right_cayley(mccammond(karnofsky_rhodes(S).graph).graph));
    }
}
