#pragma once

// Kleene expressions over generator indices.

#include "semiwalk/error.hpp"
#include "semiwalk/rational.hpp"

#include <memory>
#include <string>
#include <vector>

namespace semiwalk {

struct KleeneNode;
using Expr = std::shared_ptr<const KleeneNode>;

struct KleeneNode {
    enum class Kind { Epsilon, Letter, Concat, Union, Star };
    Kind kind = Kind::Epsilon;
    int letter = -1;
    std::vector<Expr> kids;
};

namespace kleene {

Expr epsilon();
Expr letter(int a);
/// Flattens nested concatenations and drops epsilons.
Expr concat(const std::vector<Expr>& parts);
Expr concat(const Expr& x, const Expr& y);
/// Flattens nested unions; letters are ordered first by index, other terms keep insertion order.
Expr unite(const std::vector<Expr>& parts);
Expr unite(const Expr& x, const Expr& y);
Expr star(const Expr& x);
Expr word(const std::vector<int>& letters);

}  // namespace kleene

/// Postfix ⋆, juxtaposition, unions as {x,y}.
std::string to_string(const Expr& e, const std::vector<std::string>& names);

/// Rewrites every star of a union with {e1..en}⋆ = {e1..en-1}⋆(en{e1..en-1}⋆)⋆, recursively.
Expr zimin_rewrite(const Expr& e);
bool has_star_of_union(const Expr& e);
std::size_t expr_size(const Expr& e);

/// Letter -> x_a, concat -> product, union -> sum, star f -> 1/(1-f).
/// Throws ErrorCode::DivergentStar when a star argument evaluates to 1 or more.
Rational evaluate(const Expr& e, const std::vector<Rational>& x);
RationalFunction evaluate(const Expr& e, const std::vector<RationalFunction>& x);

}  // namespace semiwalk
