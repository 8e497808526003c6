#pragma once

// Normal forms, NF⁻¹ expressions and exact stationary distributions.

#include "semiwalk/expansions.hpp"
#include "semiwalk/kleene.hpp"
#include "semiwalk/rational.hpp"
#include "semiwalk/semigroup.hpp"

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace semiwalk {

/// "a=1/3,b=2/3" (every generator once) or "uniform". Throws Parse / InvalidProbabilities.
std::vector<Rational> parse_probabilities(const Semigroup& S, std::string_view spec);
std::vector<Rational> uniform_probabilities(int k);
/// Throws InvalidProbabilities unless all entries are positive and sum to exactly 1.
void validate_probabilities(const std::vector<Rational>& x);

/// Exact distribution with ordered keys.
struct Distribution {
    std::vector<std::string> keys;
    std::vector<Rational> values;

    std::size_t size() const { return keys.size(); }
    Rational total() const;
    /// Zero when the key is absent.
    Rational at(std::string_view key) const;
    bool contains(std::string_view key) const;
};

/// Class mass is the sum of member masses; classes sorted by key.
Distribution lump_by_classifier(const Distribution& d, const std::function<std::string(const std::string&)>& classify);
/// Exact sum equals 1.
bool normalization_check(const Distribution& d);

/// w -> [w]_S in I.
bool word_in_ideal(const Semigroup& S, const std::vector<char>& ideal, const Word& w);
/// Shortest prefix of a.s lying in the ideal; s must be a code word (throws NotACodeWord).
Word semaphore_left_action(const Semigroup& S, const std::vector<char>& ideal, const Word& s, int a);

struct NormalForm {
    Word word;
    int mc_vertex = -1;
    int kr_vertex = -1;
    int element = -1;
};

/// Mc∘KR(S) with an ideal of S marked; the basis of every stationary computation.
struct Analysis {
    Semigroup semigroup;
    std::vector<int> ideal;
    std::vector<char> in_ideal;  // per S element
    KRExpansion kr;
    McExpansion mc;
    std::vector<char> mc_in_ideal;  // per Mc vertex
    std::vector<NormalForm> normal_forms;  // sorted shortlex
};

Analysis analyze(const Semigroup& S);
Analysis analyze(const Semigroup& S, const std::vector<int>& ideal);

/// Sum over semaphore words ending at each normal form (same order as normal_forms).
std::vector<Rational> normal_form_weights(const Analysis& A, const std::vector<Rational>& x);
std::vector<RationalFunction> normal_form_weights(const Analysis& A, const std::vector<RationalFunction>& x);

/// NF⁻¹ of normal form i, built by state elimination restricted to the vertices that reach its parent.
Expr nf_preimage_expr(const Analysis& A, std::size_t i);

struct StationaryOptions {
    bool expressions = false;
    /// Use the adjoined-zero limit even when K(S) is left zero.
    bool force_limit = false;
};

struct NormalFormReport {
    std::string word;
    std::string kr_key;  // KR(S) vertex the normal form lumps to
    std::string weight;  // exact value, or a rational function of t in limit mode
    std::string expr;    // empty unless expressions requested
    std::string zimin;
};

struct StationaryResult {
    bool limit_mode = false;
    Distribution kr;                // over recurrent KR(S) vertices
    std::vector<int> kr_vertices;   // parallel to kr.keys
    Distribution s;                 // lumped by S image
    std::vector<int> elements;      // parallel to s.keys
    std::vector<NormalFormReport> normal_forms;
};

StationaryResult stationary(const Semigroup& S, const std::vector<Rational>& x, const StationaryOptions& opt = {});
Distribution stationary_kr(const Semigroup& S, const std::vector<Rational>& x);
Distribution stationary_s(const Semigroup& S, const std::vector<Rational>& x);

}  // namespace semiwalk
