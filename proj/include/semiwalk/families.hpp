#pragma once

// Example semigroup families with closed-form stationary distributions.

#include "semiwalk/semigroup.hpp"
#include "semiwalk/stationary.hpp"

#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace semiwalk {

/// Where a family's closed form lives.
enum class Level { KR, S, Lumped };

struct Family {
    std::string name;  // canonical spec, e.g. "rees_zp:2,2"
    Semigroup semigroup;
    Level level = Level::KR;
    /// Exact closed form keyed like family_distribution; empty when none is known.
    std::function<Distribution(const std::vector<Rational>&)> closed_form;
    /// Lumped level only: class of a KR vertex given its path word, and the full class list.
    std::function<std::string(const Word&)> lump;
    std::vector<std::string> lump_keys;
};

// Builders.
Semigroup tsetlin(int n);
Semigroup signed_tsetlin(int n);
Semigroup rees_B(int n);
Semigroup rees_zp(int n, int p);
Semigroup rees_general();
Semigroup klein();
Semigroup flipflop();
Semigroup z2x01();
Semigroup burnside_straightline(int n);
Semigroup bar_tower(int depth);
Semigroup flat_tower(int depth);
/// Four maps on {0,1,2,3,□} whose Mc∘KR is not a right Cayley graph.
Semigroup counterexample();

// Closed forms.
Distribution tsetlin_closed_form(int n, const std::vector<Rational>& x);
/// x indexed like the generators "1","-1","2","-2",...
Distribution signed_tsetlin_closed_form(int n, const std::vector<Rational>& y);
/// Bit string reached from 0^{n+1} by a signed word, letters applied right to left.
std::string edge_flip_state(int n, const Word& signed_word);
Distribution edge_flip_closed_form(int n, const std::vector<Rational>& y);
/// y_a = p x_a, y_{-a} = (1 - p) x_a.
std::vector<Rational> edge_flip_probabilities(const std::vector<Rational>& x, const Rational& p);
Distribution rees_zp_closed_form(int n, int p, const std::vector<Rational>& x);
Distribution rees_general_closed_form(const std::vector<Rational>& x);
Distribution burnside_closed_form(int n, const std::vector<Rational>& x);
/// Product formula over normal forms with stabilizer sets; S must be R-trivial.
Distribution r_trivial_closed_form(const Semigroup& S, const std::vector<Rational>& x);
bool is_r_trivial(const Semigroup& S);

/// "tsetlin:3", "rees_zp:2,2", "klein", ... Throws Parse on unknown names or bad parameters.
Family make_family(std::string_view spec);
std::vector<std::string> family_names();

/// Runs the pipeline and reports it at the family's level.
Distribution family_distribution(const Family& F, const std::vector<Rational>& x);

}  // namespace semiwalk
