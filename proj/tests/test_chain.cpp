#include "doctest.h"
#include "fixtures.hpp"

#include "semiwalk/chain.hpp"
#include "semiwalk/families.hpp"

#include <cmath>

using namespace semiwalk;

namespace {

const char* const kFixtures[] = {"tsetlin:3",       "tsetlin:4",   "signed_tsetlin:2", "rees_B:2",     "rees_B:3",
                                 "rees_zp:2,2",     "rees_general", "klein",           "flipflop",     "z2x01",
                                 "z2x01_quotient",  "burnside_straightline:2", "bar_tower:1", "flat_tower:1",
                                 "counterexample"};

}  // namespace

TEST_CASE("total variation") {
    FloatDistribution p{{"x", "y"}, {0.5, 0.5}}, q{{"x", "y"}, {1.0 / 3, 2.0 / 3}};
    CHECK(tv_distance(p, p) == 0.0);
    CHECK(tv_distance(FloatDistribution{{"x"}, {1.0}}, FloatDistribution{{"y"}, {1.0}}) == 1.0);
    CHECK(std::fabs(tv_distance(p, q) - 1.0 / 6) < 1e-15);
}

TEST_CASE("chains are column stochastic") {
    for (const char* spec : kFixtures) {
        const Family F = make_family(spec);
        const auto x = uniform_probabilities(F.semigroup.num_generators());
        INFO(spec);
        CHECK(build_chain(F.semigroup, x, StateSpace::Ideal).is_column_stochastic());
        CHECK(build_chain(F.semigroup, x, StateSpace::Monoid).is_column_stochastic());
    }
    const TransitionMatrix T = build_chain(tsetlin(3), uniform_probabilities(3), StateSpace::Ideal);
    CHECK(T.size() == 1);
    const TransitionMatrix B = build_chain(karnofsky_rhodes(rees_B(2)).semigroup(), uniform_probabilities(2), StateSpace::Ideal);
    CHECK(B.size() == 4);
}

TEST_CASE("oracle agrees with the exact engine") {
    for (const char* spec : kFixtures) {
        const Family F = make_family(spec);
        for (const auto& x : testing_support::probability_vectors(F.semigroup.num_generators())) {
            INFO(spec);
            const StationaryResult R = stationary(F.semigroup, x);
            const FloatDistribution s = stationary_oracle(build_chain(F.semigroup, x, StateSpace::Monoid));
            const FloatDistribution kr =
                stationary_oracle(build_chain(karnofsky_rhodes(F.semigroup).semigroup(), x, StateSpace::Monoid));
            CHECK(tv_distance(s, to_float(R.s)) < 1e-10);
            CHECK(tv_distance(kr, to_float(R.kr)) < 1e-10);
            CHECK(s.keys.size() == R.s.size());
        }
    }
}

TEST_CASE("KR chain lumps onto the S chain") {
    for (const char* spec : kFixtures) {
        const Family F = make_family(spec);
        INFO(spec);
        const LumpingReport r = check_kr_to_s(F.semigroup, testing_support::probability_vectors(F.semigroup.num_generators())[2]);
        CHECK(r.lumps);
        CHECK(r.matches_s);
    }
}

TEST_CASE("corrupted table is caught by the lumping check") {
    // (0·0)·1 = 1·1 = 0 but 0·(0·1) = 0·0 = 1.
    const Semigroup bad = Semigroup::from_table_unchecked({{1, 0}, {0, 0}}, {0, 1}, {"0", "1"});
    CHECK_FALSE(bad.is_associative());
    CHECK_FALSE(check_kr_to_s(bad, uniform_probabilities(2)).matches_s);
}

TEST_CASE("non-lumpable partition is rejected") {
    const TransitionMatrix B = build_chain(karnofsky_rhodes(rees_B(2)).semigroup(), {Rational(1, 3), Rational(2, 3)}, StateSpace::Ideal);
    std::vector<int> partition{0, 0, 1, 1};
    bool any_fails = false;
    for (int i = 0; i < 3; ++i) {
        std::vector<int> p(4, 1);
        p[0] = 0;
        p[static_cast<std::size_t>(i + 1)] = 0;
        any_fails = any_fails || !check_lumping(B, p);
    }
    CHECK(any_fails);
    CHECK(check_lumping(B, std::vector<int>{0, 0, 0, 0}));
}

TEST_CASE("semaphore chain lumps onto KR on truncations") {
    for (const char* spec : {"rees_B:2", "tsetlin:3", "z2x01_quotient", "flipflop", "burnside_straightline:2"}) {
        const Semigroup S = make_family(spec).semigroup;
        const auto in = membership(S, minimal_ideal(S));
        const std::size_t L = truncation_length(S, in, 12, 200000);
        INFO(spec);
        const TruncationReport r = check_semaphore_to_kr(S, testing_support::probability_vectors(S.num_generators())[1], L);
        CHECK(r.lumps);
        CHECK(r.interior > 0);
    }
    const Semigroup B = rees_B(2);
    CHECK(truncation_length(B, membership(B, minimal_ideal(B)), 12, 200000) == 12);
    CHECK(semaphore_words(B, membership(B, minimal_ideal(B)), 3).size() == 4);
}

TEST_CASE("semaphore left action") {
    const Semigroup S = rees_quotient(z2x01(), minimal_ideal(z2x01()));
    const auto in = membership(S, minimal_ideal(S));
    const int a = 0, b = 1;
    CHECK(semaphore_left_action(S, in, Word{b, b, b, a}, b) == Word{b, b, b, b, a});
    CHECK(semaphore_left_action(S, in, Word{b, a}, a) == Word{a});
    CHECK_THROWS_AS(semaphore_left_action(S, in, Word{b, b}, a), Error);
    const Semigroup P = tsetlin(3);
    const auto pin = membership(P, minimal_ideal(P));
    CHECK(semaphore_left_action(P, pin, Word{0, 2, 1}, 1) == Word{1, 0, 2});
}

TEST_CASE("SplitMix64 reference values") {
    // Published outputs for seed 1234567.
    SplitMix64 r(1234567);
    CHECK(r.next() == 6457827717110365317ULL);
    CHECK(r.next() == 3203168211198807973ULL);
    CHECK(walker_seed(42, 0) != walker_seed(42, 1));
    CHECK(walker_seed(42, 3) == walker_seed(42, 3));
}

TEST_CASE("letter sampler is exact at the thresholds") {
    const LetterSampler one({Rational(1)});
    SplitMix64 r(5);
    for (int i = 0; i < 10; ++i) CHECK(one.draw(r) == 0);
    const LetterSampler half({Rational(1, 2), Rational(1, 2)});
    int count = 0;
    for (int i = 0; i < 100000; ++i) count += half.draw(r);
    CHECK(std::abs(count - 50000) < 1500);
}

TEST_CASE("simulation converges and is reproducible") {
    const Semigroup B = rees_B(2);
    SimulationOptions opt;
    opt.walkers = 10;
    opt.steps = 20000;
    opt.seed = 9;
    const SimulationResult a = simulate_semaphore(B, uniform_probabilities(2), opt);
    const SimulationResult b = simulate_semaphore(B, uniform_probabilities(2), opt);
    CHECK(a.counts == b.counts);
    CHECK(a.total == 200000);
    CHECK(tv_distance(a.distribution(), to_float(stationary(B, uniform_probabilities(2)).kr)) < 0.01);

    // Single letter: deterministic walk.
    const Semigroup N = Semigroup::from_table({{0}}, {0}, {"a"});
    const SimulationResult n = simulate_semaphore(N, {Rational(1)}, opt);
    CHECK(n.distribution().values == std::vector<double>{1.0});

    // Not left zero: adjoined-zero model, close to the limit distribution for a small zero weight.
    const Semigroup K = klein();
    opt.walkers = 20;
    opt.steps = 5000;
    const SimulationResult k = simulate_semaphore(K, uniform_probabilities(2), opt);
    CHECK(k.adjoined_zero);
    const FloatDistribution lumped = to_float(lump_by_classifier(stationary(K, uniform_probabilities(2)).kr,
                                                                 [](const std::string& s) { return s; }));
    CHECK(tv_distance(k.distribution(), lumped) < 0.03);
}

TEST_CASE("mixing bound parameters") {
    const MixingBound p3 = mixing_bound(tsetlin(3), uniform_probabilities(3));
    CHECK(p3.n == 3);
    CHECK(p3.ell == 1);
    CHECK(p3.k == 18);
    const MixingBound b2 = mixing_bound(rees_B(2), uniform_probabilities(2));
    CHECK(b2.n == 3);
    CHECK(b2.ell == 2);
    CHECK(b2.k == 32);
    const Semigroup line = Semigroup::from_table({{1, 2, 2}, {2, 2, 2}, {2, 2, 2}}, {0}, {"a"});
    const MixingBound l = mixing_bound(line, {Rational(1)}, Rational(2));
    CHECK(l.ell == 1);
    CHECK(l.k == static_cast<std::uint64_t>(2 * (l.n + 2 - 1)));
}

TEST_CASE("mixing check at the bound") {
    const MixingCheck m = mixing_check(rees_B(2), uniform_probabilities(2), 32, 2000, 1);
    CHECK(m.exact_tv <= std::exp(-1.0));
    CHECK(m.simulated_tv <= std::exp(-1.0));
}
