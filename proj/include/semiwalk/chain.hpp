#pragma once

// Explicit Markov chains, a floating-point oracle, lumping checks and seeded simulation.

#include "semiwalk/expansions.hpp"
#include "semiwalk/rational.hpp"
#include "semiwalk/semigroup.hpp"
#include "semiwalk/stationary.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace semiwalk {

/// Column-stochastic: columns[s] lists (s', T_{s',s}) with s' ascending.
struct TransitionMatrix {
    std::vector<std::string> labels;
    std::vector<std::vector<std::pair<int, Rational>>> columns;

    std::size_t size() const { return labels.size(); }
    bool is_column_stochastic() const;
    Rational entry(int to, int from) const;
};

enum class StateSpace {
    Ideal,   // K(S) under the left action
    Monoid,  // S¹: state 0 is the identity "1", state i+1 is element i
};

/// T_{s',s} = sum of x_a over generators a with a·s = s'.
TransitionMatrix build_chain(const Semigroup& S, const std::vector<Rational>& x, StateSpace space);
/// State of build_chain(..., Monoid) for an element, or 0 for the identity.
inline int monoid_state(int element) { return element + 1; }

/// Float distribution over labelled states.
struct FloatDistribution {
    std::vector<std::string> keys;
    std::vector<double> values;

    double at(const std::string& key) const;
};

double tv_distance(const FloatDistribution& p, const FloatDistribution& q);
FloatDistribution to_float(const Distribution& d);

struct OracleOptions {
    double tolerance = 1e-13;
    std::size_t max_iterations = 1000000;
    int start = 0;
};

/// Power iteration of the lazy chain (I+T)/2 from a start state until successive iterates are
/// within tolerance in total variation. Only recurrent states (closed classes) are reported.
/// Throws NotConverged.
FloatDistribution stationary_oracle(const TransitionMatrix& T, const OracleOptions& opt = {});

/// Recurrent states of the chain's transition graph.
std::vector<char> recurrent_states(const TransitionMatrix& T);

/// Dynkin's condition: within every class, each checked column has the same mass into every class.
/// Columns outside `columns` (when given) are ignored, which is how truncations are tested.
bool check_lumping(const TransitionMatrix& T, const std::vector<int>& partition,
                   const std::vector<char>* columns = nullptr);
/// Lumped chain, using the first member of each class as representative column.
TransitionMatrix lump(const TransitionMatrix& T, const std::vector<int>& partition, std::vector<std::string> labels);
bool same_matrix(const TransitionMatrix& A, const TransitionMatrix& B);

struct LumpingReport {
    bool lumps = false;         // the KR¹ chain satisfies the lumping condition
    bool matches_s = false;     // and the lumped chain equals the S¹ chain
};

/// KR¹ chain lumped by S image against the S¹ chain built from S's own left action.
LumpingReport check_kr_to_s(const Semigroup& S, const std::vector<Rational>& x);

/// Semaphore code words of length at most L (the ideal must be left zero for the lumping theorem).
std::vector<Word> semaphore_words(const Semigroup& S, const std::vector<char>& ideal, std::size_t max_length,
                                  std::size_t cap = 2000000);
/// Longest L <= max_length whose truncation has at most `budget` code words.
std::size_t truncation_length(const Semigroup& S, const std::vector<char>& ideal, std::size_t max_length,
                              std::size_t budget);

struct TruncationReport {
    std::size_t length = 0;
    std::size_t states = 0;
    std::size_t interior = 0;
    bool lumps = false;
};

/// Semaphore chain on code words of length <= L, lumped to KR vertices; checked on the interior
/// (words of length < L, whose images stay inside the truncation).
TruncationReport check_semaphore_to_kr(const Semigroup& S, const std::vector<Rational>& x, std::size_t max_length);

/// SplitMix64 (Steele, Lea and Flood): 64-bit state, bit-exact on every platform.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next();

private:
    std::uint64_t state_;
};

/// Seed for walker i: SplitMix64 output of the seed mixed with the index.
std::uint64_t walker_seed(std::uint64_t seed, std::uint64_t walker);

/// Draws generator indices using exact thresholds floor(c_a 2^64) for cumulative probabilities c_a.
class LetterSampler {
public:
    explicit LetterSampler(const std::vector<Rational>& x);
    int draw(SplitMix64& rng) const;

private:
    std::vector<std::uint64_t> thresholds_;
};

struct SimulationOptions {
    std::size_t walkers = 100;
    std::size_t steps = 10000;  // per walker
    std::uint64_t seed = 42;
    /// Weight of the adjoined zero when K(S) is not left zero.
    Rational zero_weight = Rational(1, 1000);
};

struct SimulationResult {
    bool adjoined_zero = false;
    std::vector<std::string> keys;          // KR(S) vertex words in vertex order ("1" for the root)
    std::vector<std::uint64_t> counts;
    std::uint64_t total = 0;

    FloatDistribution distribution() const;
};

/// Each walker samples its first code word letter by letter, then applies the semaphore left
/// action with fresh letters; every visited code word is recorded at its KR(S) vertex.
SimulationResult simulate_semaphore(const Semigroup& S, const std::vector<Rational>& x, const SimulationOptions& opt);

struct MixingBound {
    int n = 0;
    int ell = 0;
    Rational p;
    Rational c;
    std::uint64_t k = 0;
};

/// k = ceil(2(n + ℓc - 1)/p^ℓ) with n the Mc∘KR tree depth and ℓ one more than the longest run of
/// consecutive tree edges inside a strongly connected component of Mc∘KR.
MixingBound mixing_bound(const Semigroup& S, const std::vector<Rational>& x, const Rational& c = Rational(1));

struct MixingCheck {
    std::uint64_t steps = 0;
    double simulated_tv = 0;  // worst start, empirical
    double exact_tv = 0;      // worst start, by evolving distributions in floating point
    std::string worst_start;
};

/// Runs the KR¹ chain from every state for `steps` steps and compares with the engine's Ψ^KR.
MixingCheck mixing_check(const Semigroup& S, const std::vector<Rational>& x, std::uint64_t steps,
                         std::size_t walkers_per_start, std::uint64_t seed);

}  // namespace semiwalk
