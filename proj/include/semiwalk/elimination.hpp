#pragma once

// Weighted state elimination over a star semiring.

#include "semiwalk/error.hpp"
#include "semiwalk/kleene.hpp"
#include "semiwalk/rational.hpp"

#include <map>
#include <set>
#include <vector>

namespace semiwalk {

template <class W>
struct StarSemiring;

template <>
struct StarSemiring<Rational> {
    static Rational one() { return Rational(1); }
    static Rational plus(const Rational& a, const Rational& b) { return a + b; }
    static Rational times(const Rational& a, const Rational& b) { return a * b; }
    static Rational star(const Rational& a) {
        if (a >= 1) throw Error(ErrorCode::DivergentStar, "loop weight " + to_string(a) + " is not below 1");
        return Rational(1) / (Rational(1) - a);
    }
};

template <>
struct StarSemiring<RationalFunction> {
    static RationalFunction one() { return RationalFunction(Rational(1)); }
    static RationalFunction plus(const RationalFunction& a, const RationalFunction& b) { return a + b; }
    static RationalFunction times(const RationalFunction& a, const RationalFunction& b) { return a * b; }
    static RationalFunction star(const RationalFunction& a) {
        RationalFunction d = one() - a;
        if (d.is_zero()) throw Error(ErrorCode::DivergentStar, "loop weight is identically 1");
        return one() / d;
    }
};

template <>
struct StarSemiring<Expr> {
    static Expr one() { return kleene::epsilon(); }
    static Expr plus(const Expr& a, const Expr& b) { return kleene::unite(a, b); }
    static Expr times(const Expr& a, const Expr& b) { return kleene::concat(a, b); }
    static Expr star(const Expr& a) { return kleene::star(a); }
};

/// Sparse digraph with semiring weights; parallel edges are merged by plus.
template <class W>
class WeightedDigraph {
public:
    using SR = StarSemiring<W>;

    explicit WeightedDigraph(std::size_t n) : out_(n), in_(n) {}

    std::size_t size() const { return out_.size(); }

    void add_edge(int u, int v, const W& w) {
        auto& row = out_[static_cast<std::size_t>(u)];
        auto it = row.find(v);
        if (it == row.end())
            row.emplace(v, w);
        else
            it->second = SR::plus(it->second, w);
        in_[static_cast<std::size_t>(v)].insert(u);
    }

    const W* weight(int u, int v) const {
        const auto& row = out_[static_cast<std::size_t>(u)];
        auto it = row.find(v);
        return it == row.end() ? nullptr : &it->second;
    }

    const std::map<int, W>& out(int u) const { return out_[static_cast<std::size_t>(u)]; }

    /// Removes v, rerouting every path u -> v -> z through u -> z with weight w(u,v) w(v,v)⋆ w(v,z).
    void eliminate(int v) {
        const std::size_t vi = static_cast<std::size_t>(v);
        auto& row = out_[vi];
        std::vector<std::pair<int, W>> succ;
        const W* loop = nullptr;
        for (const auto& [z, w] : row) {
            if (z == v)
                loop = &w;
            else
                succ.emplace_back(z, w);
        }
        std::vector<int> preds;
        for (int u : in_[vi])
            if (u != v) preds.push_back(u);
        const bool has_loop = loop != nullptr;
        W loop_star = has_loop ? SR::star(*loop) : SR::one();
        for (int u : preds) {
            auto& urow = out_[static_cast<std::size_t>(u)];
            auto it = urow.find(v);
            W head = has_loop ? SR::times(it->second, loop_star) : it->second;
            urow.erase(it);
            for (const auto& [z, w] : succ) add_edge(u, z, SR::times(head, w));
        }
        for (const auto& [z, w] : succ) in_[static_cast<std::size_t>(z)].erase(v);
        row.clear();
        in_[vi].clear();
    }

private:
    std::vector<std::map<int, W>> out_;
    std::vector<std::set<int>> in_;
};

}  // namespace semiwalk
