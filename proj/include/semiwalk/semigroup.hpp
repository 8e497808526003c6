#pragma once

// Finite A-semigroups stored through their right Cayley graph.

#include "semiwalk/error.hpp"

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace semiwalk {

using Word = std::vector<int>;

/// Prints a word by generator names: juxtaposed when every name is a single glyph
/// (a leading '-' is allowed, as in signed letters), dot-separated otherwise. Empty word prints "1".
std::string format_word(const std::vector<std::string>& names, const Word& w);
/// Inverse of format_word for the same alphabet; throws ErrorCode::Parse.
Word parse_word(const std::vector<std::string>& names, std::string_view text);
bool shortlex_less(const Word& a, const Word& b);

class Semigroup {
public:
    static constexpr std::size_t kDefaultCap = 100000;

    Semigroup() = default;

    /// table[i][j] = i*j over elements 0..n-1; gens are element indices.
    /// Throws NotAssociative or GeneratorsDoNotGenerate.
    static Semigroup from_table(const std::vector<std::vector<int>>& table, const std::vector<int>& gens,
                                std::vector<std::string> gen_names = {}, std::vector<std::string> labels = {});

    /// Like from_table but skips the associativity test (used to inspect corrupted input).
    static Semigroup from_table_unchecked(const std::vector<std::vector<int>>& table, const std::vector<int>& gens,
                                          std::vector<std::string> gen_names = {},
                                          std::vector<std::string> labels = {});

    /// Maps act on states 0..n-1 from the right: q.(fg) = (q.f).g.
    static Semigroup from_transformations(int states, std::vector<std::string> gen_names,
                                          const std::vector<std::vector<int>>& maps,
                                          std::size_t cap = kDefaultCap);

    /// right[x][a] must be the right Cayley graph of a semigroup on elements 0..n-1 with
    /// generator a mapped to gen_elem[a]. Elements are renumbered in breadth-first order.
    static Semigroup from_right_action(std::vector<std::string> gen_names, const std::vector<int>& gen_elem,
                                       const std::vector<std::vector<int>>& right,
                                       std::vector<std::string> labels = {});

    /// Closure of `gens` under right multiplication by generators with an associative `mul`.
    template <class T, class Mul, class Label>
    static Semigroup generate(std::vector<std::string> gen_names, const std::vector<T>& gens, Mul mul, Label label,
                              std::size_t cap = kDefaultCap);

    std::size_t size() const { return right_.size(); }
    int num_generators() const { return static_cast<int>(gen_elem_.size()); }
    const std::vector<std::string>& generator_names() const { return names_; }
    int generator(int a) const { return gen_elem_[static_cast<std::size_t>(a)]; }
    int generator_index(std::string_view name) const;

    int right(int x, int a) const { return right_[static_cast<std::size_t>(x)][static_cast<std::size_t>(a)]; }
    int left(int a, int x) const { return left_[static_cast<std::size_t>(a)][static_cast<std::size_t>(x)]; }
    int multiply(int u, int v) const;
    /// [w]_S; the empty word is rejected since 1 is not an element.
    int product(const Word& w) const;
    /// Right action of a word on an element (x itself for the empty word).
    int act(int x, const Word& w) const;

    /// Shortlex-least word representing x.
    const Word& rep(int x) const { return reps_[static_cast<std::size_t>(x)]; }
    std::string name(int x) const { return format_word(names_, rep(x)); }
    const std::string& label(int x) const { return labels_[static_cast<std::size_t>(x)]; }
    std::string word_string(const Word& w) const { return format_word(names_, w); }
    Word parse(std::string_view text) const { return parse_word(names_, text); }
    /// Position of x in the input numbering handed to the constructor.
    int input_index(int x) const { return input_index_[static_cast<std::size_t>(x)]; }

    /// Exhaustive test of (xy)z = x(yz); only sensible for small semigroups.
    bool is_associative() const;

private:
    static Semigroup build(std::vector<std::string> gen_names, const std::vector<int>& gen_elem,
                           const std::vector<std::vector<int>>& right, std::vector<std::string> labels,
                           const char* context);
    void compute_left();

    std::vector<std::string> names_;
    std::vector<int> gen_elem_;
    std::vector<std::vector<int>> right_;
    std::vector<std::vector<int>> left_;
    std::vector<Word> reps_;
    std::vector<std::string> labels_;
    std::vector<int> input_index_;
};

template <class T, class Mul, class Label>
Semigroup Semigroup::generate(std::vector<std::string> gen_names, const std::vector<T>& gens, Mul mul, Label label,
                              std::size_t cap) {
    if (gens.empty()) throw Error(ErrorCode::InvalidArgument, "no generators");
    std::map<T, int> index;
    std::vector<T> elems;
    auto intern = [&](const T& v) {
        auto [it, fresh] = index.emplace(v, static_cast<int>(elems.size()));
        if (fresh) {
            if (elems.size() >= cap)
                throw Error(ErrorCode::ClosureTooLarge, "closure exceeds " + std::to_string(cap) + " elements");
            elems.push_back(v);
        }
        return it->second;
    };
    std::vector<int> gen_elem;
    for (const T& g : gens) gen_elem.push_back(intern(g));
    std::vector<std::vector<int>> right;
    for (std::size_t i = 0; i < elems.size(); ++i) {
        std::vector<int> row(gens.size());
        for (std::size_t a = 0; a < gens.size(); ++a) {
            T prod = mul(elems[i], gens[a]);
            row[a] = intern(prod);
        }
        right.push_back(std::move(row));
    }
    std::vector<std::string> labels;
    labels.reserve(elems.size());
    for (const T& e : elems) labels.push_back(label(e));
    return from_right_action(std::move(gen_names), gen_elem, right, std::move(labels));
}

/// Minimal two-sided ideal K(S), sorted element indices.
std::vector<int> minimal_ideal(const Semigroup& S);
std::vector<char> membership(const Semigroup& S, const std::vector<int>& ideal);
/// Two-sided ideal S^1 x S^1.
std::vector<int> principal_ideal(const Semigroup& S, int x);
bool is_ideal(const Semigroup& S, const std::vector<int>& members);
bool is_left_zero(const Semigroup& S, const std::vector<int>& ideal);

/// S/I with I collapsed to a zero (labelled "0").
Semigroup rees_quotient(const Semigroup& S, const std::vector<int>& ideal);
/// S with a new zero element and generator named "□" appended last.
Semigroup adjoin_zero(const Semigroup& S, const std::string& zero_name = "□");
Semigroup opposite(const Semigroup& S);
/// S ∪ S̄ ∪ {1̄} with the constant-map relations; new generator "1̄".
Semigroup bar(const Semigroup& S);
/// Dual of bar: S ∪ S̃ ∪ {1̃}; new generator "1̃".
Semigroup flat(const Semigroup& S);

/// Isomorphism of A-semigroups matching generators by position.
bool isomorphic(const Semigroup& S, const Semigroup& T);

extern const std::string kZeroName;  // "□"
extern const std::string kBarOne;    // "1̄"
extern const std::string kFlatOne;   // "1̃"

}  // namespace semiwalk
