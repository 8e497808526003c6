// Acceptance checks: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include "semiwalk/cayley.hpp"
#include "semiwalk/chain.hpp"
#include "semiwalk/expansions.hpp"
#include "semiwalk/families.hpp"
#include "semiwalk/stationary.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace semiwalk;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (cond) return;
        if (ok) detail = what;
        ok = false;
    }
};

int failures = 0;

void criterion(int id, const char* title, double time_limit, const std::function<void(Outcome&)>& body) {
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    try {
        body(out);
    } catch (const std::exception& e) {
        out.ok = false;
        out.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (time_limit > 0 && secs > time_limit) {
        if (out.ok) out.detail = "took longer than " + std::to_string(time_limit) + " s";
        out.ok = false;
    }
    if (!out.ok) ++failures;
    std::printf("%s %d %s (%.2f s)%s%s\n", out.ok ? "PASS" : "FAIL", id, title, secs, out.detail.empty() ? "" : ": ",
                out.detail.c_str());
    std::fflush(stdout);
}

Rational q(long n, long d = 1) { return Rational(n, d); }

std::vector<Rational> normalized(std::vector<Rational> v) {
    const Rational total = std::accumulate(v.begin(), v.end(), Rational(0));
    for (auto& e : v) e /= total;
    return v;
}

/// Uniform, a fixed skewed vector and a seeded random one.
std::vector<std::vector<Rational>> three_vectors(int k) {
    std::vector<std::vector<Rational>> out;
    out.emplace_back(static_cast<std::size_t>(k), q(1, k));
    std::vector<Rational> skew;
    for (int i = 0; i < k; ++i) skew.push_back(q(1, 1L << i));
    out.push_back(normalized(skew));
    SplitMix64 rng(20240611);
    std::vector<Rational> rnd;
    for (int i = 0; i < k; ++i) rnd.push_back(q(static_cast<long>(1 + rng.next() % 1000)));
    out.push_back(normalized(rnd));
    return out;
}

double max_abs_diff(const FloatDistribution& f, const Distribution& d) {
    double m = 0;
    for (std::size_t i = 0; i < d.size(); ++i) m = std::max(m, std::fabs(f.at(d.keys[i]) - to_double(d.values[i])));
    for (std::size_t i = 0; i < f.keys.size(); ++i) m = std::max(m, std::fabs(f.values[i] - to_double(d.at(f.keys[i]))));
    return m;
}

/// Ψ_π = Π_i x_{π_i} / (x_{π_i} + ... + x_{π_n}) over permutations written as digit strings.
Distribution move_to_front_stationary(int n, const std::vector<Rational>& x) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    Distribution d;
    do {
        Rational value = 1;
        std::string key;
        for (int i = 0; i < n; ++i) {
            Rational tail = 0;
            for (int j = i; j < n; ++j) tail += x[static_cast<std::size_t>(perm[static_cast<std::size_t>(j)])];
            value *= x[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] / tail;
            key += std::to_string(perm[static_cast<std::size_t>(i)] + 1);
        }
        d.keys.push_back(key);
        d.values.push_back(value);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return d;
}

bool same_distribution(const Distribution& a, const Distribution& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!b.contains(a.keys[i]) || b.at(a.keys[i]) != a.values[i]) return false;
    return true;
}

const std::vector<std::string>& desk_families() {
    static const std::vector<std::string> specs = [] {
        std::vector<std::string> v;
        for (int n = 1; n <= 4; ++n) v.push_back("tsetlin:" + std::to_string(n));
        for (int n = 1; n <= 3; ++n) v.push_back("signed_tsetlin:" + std::to_string(n));
        for (int n = 2; n <= 3; ++n) v.push_back("edge_flip_line:" + std::to_string(n));
        for (int n = 1; n <= 4; ++n) v.push_back("rees_B:" + std::to_string(n));
        for (int n = 1; n <= 3; ++n)
            for (int p = 1; p <= 3; ++p) v.push_back("rees_zp:" + std::to_string(n) + "," + std::to_string(p));
        for (int d = 0; d <= 2; ++d) {
            v.push_back("bar_tower:" + std::to_string(d));
            v.push_back("flat_tower:" + std::to_string(d));
        }
        for (int n = 1; n <= 4; ++n) v.push_back("burnside_straightline:" + std::to_string(n));
        for (const char* s : {"rees_general", "klein", "flipflop", "z2x01", "z2x01_quotient", "counterexample"}) v.push_back(s);
        return v;
    }();
    return specs;
}

}  // namespace

int main() {
    criterion(1, "Tsetlin library matches the move-to-front product and the oracle", 5, [](Outcome& out) {
        for (int n : {3, 4}) {
            std::vector<std::vector<Rational>> vectors = three_vectors(n);
            vectors[1] = n == 3 ? std::vector<Rational>{q(1, 2), q(1, 3), q(1, 6)}
                                : std::vector<Rational>{q(1, 2), q(1, 4), q(1, 6), q(1, 12)};
            const Semigroup S = tsetlin(n);
            const Semigroup kr = karnofsky_rhodes(S).semigroup();
            for (const auto& x : vectors) {
                const StationaryResult R = stationary(S, x);
                const std::string tag = "n=" + std::to_string(n);
                // K(P(n)) is the single element [n]; the permutation law is Ψ on KR(P(n)).
                out.require(R.s.size() == 1 && R.s.values[0] == 1, tag + ": S level is not the point mass on [n]");
                out.require(same_distribution(R.kr, move_to_front_stationary(n, x)), tag + ": exact mismatch");
                const double diff = max_abs_diff(stationary_oracle(build_chain(kr, x, StateSpace::Monoid)), R.kr);
                out.require(diff < 1e-10, tag + ": oracle differs by " + std::to_string(diff));
            }
        }
    });

    criterion(2, "B(2) stationary values and NF preimage expressions", 1, [](Outcome& out) {
        StationaryOptions opt;
        opt.expressions = true;
        const StationaryResult R = stationary(rees_B(2), {q(1, 2), q(1, 2)}, opt);
        const Distribution want{{"aa", "abb", "baa", "bb"}, {q(1, 3), q(1, 6), q(1, 6), q(1, 3)}};
        out.require(same_distribution(R.kr, want), "values differ");
        // K(B(2)) is the zero alone
        out.require(R.s.size() == 1 && R.s.values[0] == 1, "S level is not a point mass");
        std::set<std::string> exprs;
        for (const auto& nf : R.normal_forms) exprs.insert(nf.word + " " + nf.expr);
        const std::set<std::string> expected{"aa a(ba)⋆a", "abb ab(ab)⋆b", "baa ba(ba)⋆a", "bb b(ab)⋆b"};
        out.require(exprs == expected, "expressions differ");
    });

    criterion(3, "Rees matrix with sandwich (1 1; 1 -1): limit through an adjoined zero", 2, [](Outcome& out) {
        const Rational xa(2, 5), xb(3, 5);
        const StationaryResult R = stationary(rees_general(), {xa, xb});
        out.require(R.limit_mode, "limit mode not used");
        const Rational h(1, 2);
        const Distribution want{{"a", "ab", "aba", "abab", "b", "ba", "bab", "baba"},
                                {h * xa * xa, h * xa * xb, h * xa * xa, h * xa * xb, h * xb * xb, h * xa * xb, h * xb * xb,
                                 h * xa * xb}};
        out.require(same_distribution(R.kr, want), "limit values differ");
        out.require(R.kr.at("a") == q(2, 25) && R.kr.at("ab") == q(3, 25), "a or ab differs");
        // the weights are nontrivial functions of t before the limit
        bool symbolic = false;
        for (const auto& nf : R.normal_forms) symbolic = symbolic || nf.weight.find('t') != std::string::npos;
        out.require(symbolic, "weights carry no t");
    });

    criterion(4, "edge flipping on a line", 5, [](Outcome& out) {
        {
            const Family F = make_family("edge_flip_line:2");
            const std::vector<Rational> x{q(2, 7), q(5, 7)};
            const Distribution d = family_distribution(F, edge_flip_probabilities(x, q(1, 2)));
            const Rational quarter(1, 4);
            out.require(d.size() == 8, "n=2: expected 8 states");
            out.require(d.at("000") == quarter && d.at("111") == quarter, "n=2: Ψ_000, Ψ_111");
            out.require(d.at("001") == x[0] / 4 && d.at("110") == x[0] / 4, "n=2: Ψ_001, Ψ_110");
            out.require(d.contains("010") && d.at("010") == 0 && d.at("101") == 0, "n=2: Ψ_010, Ψ_101");
            out.require(d.at("011") == x[1] / 4 && d.at("100") == x[1] / 4, "n=2: Ψ_011, Ψ_100");
        }
        {
            const Family F = make_family("edge_flip_line:3");
            const std::vector<Rational> x{q(1, 6), q(1, 3), q(1, 2)};
            const Distribution d = family_distribution(F, edge_flip_probabilities(x, q(1, 2)));
            out.require(d.at("0010") == x[0] * x[1] / (8 * (x[1] + x[2])), "n=3: Ψ_0010");
            out.require(normalization_check(d), "n=3: not normalized");
        }
    });

    criterion(5, "vertex counts of Cayley graphs and expansions", 0, [](Outcome& out) {
        const KRExpansion kk = karnofsky_rhodes(klein());
        out.require(kk.graph.size() == 9, "KR(Klein) = " + std::to_string(kk.graph.size()));
        const McExpansion mk = mccammond(kk.graph);
        out.require(mk.graph.size() == 15, "Mc∘KR(Klein) = " + std::to_string(mk.graph.size()));
        out.require(right_cayley(tsetlin(3)).size() == 8, "RCay(P(3))");
        out.require(karnofsky_rhodes(tsetlin(3)).graph.size() == 16, "KR(P(3))");
        out.require(karnofsky_rhodes(flipflop()).graph.size() == 4, "KR(flip-flop)");
    });

    criterion(6, "stationary sums are exactly 1 for every family at desk scale", 0, [](Outcome& out) {
        for (const std::string& spec : desk_families()) {
            const Family F = make_family(spec);
            for (const auto& x : three_vectors(F.semigroup.num_generators())) {
                const StationaryResult R = stationary(F.semigroup, x);
                out.require(normalization_check(R.kr) && normalization_check(R.s), spec + " sums to " + to_string(R.kr.total()));
            }
        }
    });

    criterion(7, "KR chain lumps onto S; semaphore truncations lump onto KR", 0, [](Outcome& out) {
        std::size_t semaphore_checked = 0;
        for (const std::string& spec : desk_families()) {
            const Family F = make_family(spec);
            const Semigroup& S = F.semigroup;
            const auto x = three_vectors(S.num_generators())[2];
            const LumpingReport r = check_kr_to_s(S, x);
            out.require(r.lumps && r.matches_s, spec + ": KR -> S");
            const std::vector<int> K = minimal_ideal(S);
            if (!is_left_zero(S, K)) continue;
            const std::size_t len = truncation_length(S, membership(S, K), 12, 200000);
            const TruncationReport t = check_semaphore_to_kr(S, x, len);
            out.require(t.lumps, spec + ": semaphore -> KR at length " + std::to_string(len));
            ++semaphore_checked;
        }
        out.require(semaphore_checked >= 10, "too few left-zero fixtures");
    });

    criterion(8, "transformation counterexample: Mc∘KR is not a right Cayley graph", 0, [](Outcome& out) {
        const Semigroup S = counterexample();
        out.require(!is_mc_stable(S), "is_mc_stable returned true");
        const McExpansion M = mccammond(karnofsky_rhodes(S).graph);
        out.require(!is_right_cayley(M.graph), "Mc∘KR is a right Cayley graph");
        const RootedGraph R = right_cayley(S);
        const int a1 = 0, a2 = 1, a3 = 2, c = 3;
        const Word u{a1, a2, a3}, uu{a1, a2, a3, a1, a2, a3};
        const Word cu{c, a1, a2, a3}, cuu{c, a1, a2, a3, a1, a2, a3}, ca1a3{c, a1, a3};
        out.require(R.follow(0, u) == R.follow(0, uu), "RCay: τ(a1a2a3) != τ(a1a2a3a1a2a3)");
        out.require(M.graph.follow(0, u) == M.graph.follow(0, uu), "Mc∘KR: τ(a1a2a3) != τ(a1a2a3a1a2a3)");
        out.require(M.graph.follow(0, cu) != M.graph.follow(0, cuu), "documented witness fails, τ(c·a₁a₂a₃) = τ(c·a₁a₂a₃a₁a₂a₃) = c·a₁a₂a₃ since a₁a₂a₃ cycles inside one R-class of constants");
        out.require(M.graph.word[static_cast<std::size_t>(M.graph.follow(0, cu))] == cu, "Mc∘KR: τ(ca1a2a3) is not ca1a2a3");
        out.require(M.graph.word[static_cast<std::size_t>(M.graph.follow(0, cuu))] == ca1a3, "Mc∘KR: τ(ca1a2a3a1a2a3) is not ca1a3");
    });

    criterion(9, "semaphore simulation of B(2): TV <= 0.005 and reproducible", 0, [](Outcome& out) {
        const Semigroup S = rees_B(2);
        const auto x = uniform_probabilities(2);
        SimulationOptions opt;
        opt.walkers = 100;
        opt.steps = 10000;
        opt.seed = 42;
        const SimulationResult a = simulate_semaphore(S, x, opt);
        const SimulationResult b = simulate_semaphore(S, x, opt);
        out.require(a.total == 1000000, "expected 10^6 steps");
        const double tv = tv_distance(a.distribution(), to_float(stationary(S, x).kr));
        out.require(tv <= 0.005, "TV " + std::to_string(tv));
        out.require(a.keys == b.keys && a.counts == b.counts, "rerun differs");
        if (out.ok) out.detail = "TV " + std::to_string(tv);
    });

    criterion(10, "mixing bound: simulated TV at k steps is at most 1/e", 30, [](Outcome& out) {
        std::ostringstream detail;
        for (const auto& [name, S] : {std::pair<std::string, Semigroup>{"P(3)", tsetlin(3)}, {"B(2)", rees_B(2)}}) {
            const auto x = uniform_probabilities(S.num_generators());
            const MixingBound b = mixing_bound(S, x, Rational(1));
            const MixingCheck m = mixing_check(S, x, b.k, 20000, 42);
            out.require(m.simulated_tv <= std::exp(-1.0), name + ": simulated TV " + std::to_string(m.simulated_tv));
            out.require(m.exact_tv <= std::exp(-1.0), name + ": evolved TV " + std::to_string(m.exact_tv));
            detail << name << " k=" << b.k << " TV " << m.simulated_tv << "; ";
        }
        if (out.ok) out.detail = detail.str();
    });

    return failures == 0 ? 0 : 1;
}
