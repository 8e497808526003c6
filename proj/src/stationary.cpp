#include "semiwalk/stationary.hpp"

#include "semiwalk/elimination.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace semiwalk {

// -------------------------------------------------------------- probabilities

std::vector<Rational> uniform_probabilities(int k) {
    return std::vector<Rational>(static_cast<std::size_t>(k), Rational(1, static_cast<unsigned long>(k)));
}

void validate_probabilities(const std::vector<Rational>& x) {
    Rational sum = 0;
    for (const Rational& v : x) {
        if (v <= 0) throw Error(ErrorCode::InvalidProbabilities, "probability " + to_string(v) + " is not positive");
        sum += v;
    }
    if (sum != 1) throw Error(ErrorCode::InvalidProbabilities, "probabilities sum to " + to_string(sum) + ", not 1");
}

std::vector<Rational> parse_probabilities(const Semigroup& S, std::string_view spec) {
    const int k = S.num_generators();
    if (spec == "uniform") return uniform_probabilities(k);
    std::vector<std::string_view> items;
    std::size_t start = 0;
    while (start <= spec.size()) {
        std::size_t end = spec.find(',', start);
        if (end == std::string_view::npos) end = spec.size();
        items.push_back(spec.substr(start, end - start));
        start = end + 1;
    }
    std::vector<Rational> x(static_cast<std::size_t>(k));
    std::vector<char> given(static_cast<std::size_t>(k), 0);
    const bool named = spec.find('=') != std::string_view::npos;
    if (!named && static_cast<int>(items.size()) != k)
        throw Error(ErrorCode::Parse, "expected " + std::to_string(k) + " probabilities");
    for (std::size_t i = 0; i < items.size(); ++i) {
        int a = static_cast<int>(i);
        std::string_view value = items[i];
        if (named) {
            auto eq = items[i].rfind('=');
            if (eq == std::string_view::npos) throw Error(ErrorCode::Parse, "expected name=value in '" + std::string(items[i]) + "'");
            std::string_view name = items[i].substr(0, eq);
            a = S.generator_index(name);
            if (a < 0) throw Error(ErrorCode::Parse, "unknown generator '" + std::string(name) + "'");
            value = items[i].substr(eq + 1);
        }
        if (given[static_cast<std::size_t>(a)]) throw Error(ErrorCode::Parse, "generator given twice");
        given[static_cast<std::size_t>(a)] = 1;
        x[static_cast<std::size_t>(a)] = parse_rational(value);
    }
    for (int a = 0; a < k; ++a)
        if (!given[static_cast<std::size_t>(a)])
            throw Error(ErrorCode::Parse, "missing probability for generator '" + S.generator_names()[static_cast<std::size_t>(a)] + "'");
    validate_probabilities(x);
    return x;
}

// --------------------------------------------------------------- distribution

Rational Distribution::total() const {
    Rational s = 0;
    for (const Rational& v : values) s += v;
    return s;
}

Rational Distribution::at(std::string_view key) const {
    for (std::size_t i = 0; i < keys.size(); ++i)
        if (keys[i] == key) return values[i];
    return Rational(0);
}

bool Distribution::contains(std::string_view key) const {
    return std::find(keys.begin(), keys.end(), key) != keys.end();
}

Distribution lump_by_classifier(const Distribution& d, const std::function<std::string(const std::string&)>& classify) {
    std::map<std::string, Rational> mass;
    for (std::size_t i = 0; i < d.size(); ++i) mass[classify(d.keys[i])] += d.values[i];
    Distribution out;
    for (auto& [k, v] : mass) {
        out.keys.push_back(k);
        out.values.push_back(v);
    }
    return out;
}

bool normalization_check(const Distribution& d) { return d.total() == 1; }

// ---------------------------------------------------------------- semaphores

bool word_in_ideal(const Semigroup& S, const std::vector<char>& ideal, const Word& w) {
    return !w.empty() && ideal[static_cast<std::size_t>(S.product(w))];
}

Word semaphore_left_action(const Semigroup& S, const std::vector<char>& ideal, const Word& s, int a) {
    // Check s is a code word: it enters the ideal exactly at its last letter.
    int x = -1;
    for (std::size_t i = 0; i < s.size(); ++i) {
        x = x < 0 ? S.generator(s[i]) : S.right(x, s[i]);
        bool in = ideal[static_cast<std::size_t>(x)];
        if (in != (i + 1 == s.size())) throw Error(ErrorCode::NotACodeWord, "'" + S.word_string(s) + "' is not a code word");
    }
    if (s.empty()) throw Error(ErrorCode::NotACodeWord, "empty word is not a code word");
    Word out{a};
    x = S.generator(a);
    for (std::size_t i = 0; !ideal[static_cast<std::size_t>(x)]; ++i) {
        out.push_back(s[i]);
        x = S.right(x, s[i]);
    }
    return out;
}

// ------------------------------------------------------------------ analysis

Analysis analyze(const Semigroup& S) { return analyze(S, minimal_ideal(S)); }

Analysis analyze(const Semigroup& S, const std::vector<int>& ideal) {
    if (!is_ideal(S, ideal)) throw Error(ErrorCode::InvalidArgument, "not an ideal");
    Analysis A;
    A.semigroup = S;
    A.ideal = ideal;
    A.in_ideal = membership(S, ideal);
    A.kr = karnofsky_rhodes(S);
    A.mc = mccammond(A.kr.graph);
    const std::size_t n = A.mc.graph.size();
    A.mc_in_ideal.assign(n, 0);
    for (std::size_t v = 0; v < n; ++v) {
        int e = A.mc.graph.image[v];
        A.mc_in_ideal[v] = e >= 0 && A.in_ideal[static_cast<std::size_t>(e)];
    }
    for (std::size_t v = 0; v < n; ++v) {
        if (!A.mc_in_ideal[v]) continue;
        int p = A.mc.parent[v];
        if (A.mc_in_ideal[static_cast<std::size_t>(p)]) continue;
        NormalForm nf;
        nf.word = A.mc.graph.word[v];
        nf.mc_vertex = static_cast<int>(v);
        nf.kr_vertex = A.mc.source[v];
        nf.element = A.mc.graph.image[v];
        A.normal_forms.push_back(std::move(nf));
    }
    std::sort(A.normal_forms.begin(), A.normal_forms.end(),
              [](const NormalForm& a, const NormalForm& b) { return a.word < b.word; });
    return A;
}

namespace {

// Deepest first; ties broken by the lexicographic order of path words.
std::vector<int> elimination_order(const McExpansion& mc, const std::vector<int>& vertices) {
    std::vector<int> order = vertices;
    std::sort(order.begin(), order.end(), [&](int u, int v) {
        int du = mc.depth[static_cast<std::size_t>(u)], dv = mc.depth[static_cast<std::size_t>(v)];
        if (du != dv) return du > dv;
        return mc.graph.word[static_cast<std::size_t>(u)] < mc.graph.word[static_cast<std::size_t>(v)];
    });
    return order;
}

template <class W>
std::vector<W> weights_impl(const Analysis& A, const std::vector<W>& x) {
    const McExpansion& mc = A.mc;
    const std::size_t n = mc.graph.size();
    const int k = mc.graph.num_generators;
    WeightedDigraph<W> G(n);
    std::vector<int> interior;
    for (std::size_t v = 0; v < n; ++v) {
        if (A.mc_in_ideal[v]) continue;
        if (static_cast<int>(v) != mc.graph.root) interior.push_back(static_cast<int>(v));
        for (int a = 0; a < k; ++a) {
            int w = mc.graph.edge(static_cast<int>(v), a);
            if (w >= 0) G.add_edge(static_cast<int>(v), w, x[static_cast<std::size_t>(a)]);
        }
    }
    for (int v : elimination_order(mc, interior)) G.eliminate(v);
    std::vector<W> out;
    for (const NormalForm& nf : A.normal_forms) {
        const W* w = G.weight(mc.graph.root, nf.mc_vertex);
        if (!w) throw Error(ErrorCode::InvalidArgument, "normal form unreachable after elimination");
        out.push_back(*w);
    }
    return out;
}

}  // namespace

std::vector<Rational> normal_form_weights(const Analysis& A, const std::vector<Rational>& x) {
    return weights_impl(A, x);
}

std::vector<RationalFunction> normal_form_weights(const Analysis& A, const std::vector<RationalFunction>& x) {
    return weights_impl(A, x);
}

Expr nf_preimage_expr(const Analysis& A, std::size_t i) {
    const McExpansion& mc = A.mc;
    const NormalForm& nf = A.normal_forms.at(i);
    const int p = mc.parent[static_cast<std::size_t>(nf.mc_vertex)];
    const int last = nf.word.back();
    const int root = mc.graph.root;
    const std::size_t n = mc.graph.size();
    const int k = mc.graph.num_generators;

    std::vector<std::vector<int>> preds(n);
    for (std::size_t v = 0; v < n; ++v) {
        if (A.mc_in_ideal[v]) continue;
        for (int a = 0; a < k; ++a) {
            int w = mc.graph.edge(static_cast<int>(v), a);
            if (w >= 0 && !A.mc_in_ideal[static_cast<std::size_t>(w)]) preds[static_cast<std::size_t>(w)].push_back(static_cast<int>(v));
        }
    }
    std::vector<char> reach(n, 0);
    std::deque<int> queue{p};
    reach[static_cast<std::size_t>(p)] = 1;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int u : preds[static_cast<std::size_t>(v)])
            if (!reach[static_cast<std::size_t>(u)]) {
                reach[static_cast<std::size_t>(u)] = 1;
                queue.push_back(u);
            }
    }
    WeightedDigraph<Expr> G(n);
    std::vector<int> interior;
    for (std::size_t v = 0; v < n; ++v) {
        if (!reach[v]) continue;
        if (static_cast<int>(v) != root && static_cast<int>(v) != p) interior.push_back(static_cast<int>(v));
        for (int a = 0; a < k; ++a) {
            int w = mc.graph.edge(static_cast<int>(v), a);
            if (w >= 0 && reach[static_cast<std::size_t>(w)]) G.add_edge(static_cast<int>(v), w, kleene::letter(a));
        }
    }
    for (int v : elimination_order(mc, interior)) G.eliminate(v);
    std::vector<Expr> parts;
    if (p != root) {
        const Expr* head = G.weight(root, p);
        if (!head) throw Error(ErrorCode::InvalidArgument, "parent of normal form unreachable");
        parts.push_back(*head);
    }
    if (const Expr* loop = G.weight(p, p)) parts.push_back(kleene::star(*loop));
    parts.push_back(kleene::letter(last));
    return kleene::concat(parts);
}

// ---------------------------------------------------------------- stationary

namespace {

void fill_results(StationaryResult& R, const Semigroup& S, const KRExpansion& kr, const std::vector<Rational>& mass) {
    const std::vector<std::string>& names = S.generator_names();
    std::vector<Rational> by_element(S.size());
    std::vector<char> seen(S.size(), 0);
    for (std::size_t v = 0; v < kr.graph.size(); ++v) {
        if (mass[v] == 0) continue;
        R.kr.keys.push_back(format_word(names, kr.graph.word[v]));
        R.kr.values.push_back(mass[v]);
        R.kr_vertices.push_back(static_cast<int>(v));
        std::size_t e = static_cast<std::size_t>(kr.graph.image[v]);
        by_element[e] += mass[v];
        seen[e] = 1;
    }
    for (std::size_t e = 0; e < S.size(); ++e) {
        if (!seen[e]) continue;
        R.s.keys.push_back(S.name(static_cast<int>(e)));
        R.s.values.push_back(by_element[e]);
        R.elements.push_back(static_cast<int>(e));
    }
}

}  // namespace

StationaryResult stationary(const Semigroup& S, const std::vector<Rational>& x, const StationaryOptions& opt) {
    const int k = S.num_generators();
    if (static_cast<int>(x.size()) != k)
        throw Error(ErrorCode::InvalidProbabilities, "expected " + std::to_string(k) + " probabilities");
    validate_probabilities(x);
    StationaryResult R;
    const std::vector<int> K = minimal_ideal(S);
    R.limit_mode = opt.force_limit || !is_left_zero(S, K);

    if (!R.limit_mode) {
        Analysis A = analyze(S, K);
        std::vector<Rational> w = normal_form_weights(A, x);
        std::vector<Rational> mass(A.kr.graph.size());
        for (std::size_t i = 0; i < A.normal_forms.size(); ++i) {
            const NormalForm& nf = A.normal_forms[i];
            mass[static_cast<std::size_t>(nf.kr_vertex)] += w[i];
            NormalFormReport rep;
            rep.word = S.word_string(nf.word);
            rep.kr_key = S.word_string(A.kr.graph.word[static_cast<std::size_t>(nf.kr_vertex)]);
            rep.weight = to_string(w[i]);
            if (opt.expressions) {
                Expr e = nf_preimage_expr(A, i);
                rep.expr = to_string(e, S.generator_names());
                rep.zimin = to_string(zimin_rewrite(e), S.generator_names());
            }
            R.normal_forms.push_back(std::move(rep));
        }
        fill_results(R, S, A.kr, mass);
        return R;
    }

    // Adjoin a zero with weight t, scale the rest by (1 - t), and let t -> 0.
    const Semigroup Sz = adjoin_zero(S);
    Analysis A = analyze(Sz);
    const RationalFunction t = RationalFunction::t();
    const RationalFunction one_minus_t = RationalFunction(Rational(1)) - t;
    std::vector<RationalFunction> xt;
    for (const Rational& v : x) xt.push_back(RationalFunction(v) * one_minus_t);
    xt.push_back(t);
    std::vector<RationalFunction> w = normal_form_weights(A, xt);
    const KRExpansion kr = karnofsky_rhodes(S);
    std::vector<Rational> mass(kr.graph.size());
    for (std::size_t i = 0; i < A.normal_forms.size(); ++i) {
        const NormalForm& nf = A.normal_forms[i];
        if (nf.word.back() != k) throw Error(ErrorCode::InvalidArgument, "normal form does not end in the adjoined zero");
        Word v(nf.word.begin(), nf.word.end() - 1);
        const int vertex = kr.graph.follow(kr.graph.root, v);
        NormalFormReport rep;
        rep.word = Sz.word_string(nf.word);
        rep.kr_key = S.word_string(kr.graph.word[static_cast<std::size_t>(vertex)]);
        rep.weight = w[i].to_string();
        if (opt.expressions) {
            Expr e = nf_preimage_expr(A, i);
            rep.expr = to_string(e, Sz.generator_names());
            rep.zimin = to_string(zimin_rewrite(e), Sz.generator_names());
        }
        R.normal_forms.push_back(std::move(rep));
        if (vertex == kr.graph.root) continue;
        mass[static_cast<std::size_t>(vertex)] += w[i].limit_at_zero();
    }
    fill_results(R, S, kr, mass);
    return R;
}

Distribution stationary_kr(const Semigroup& S, const std::vector<Rational>& x) { return stationary(S, x).kr; }

Distribution stationary_s(const Semigroup& S, const std::vector<Rational>& x) { return stationary(S, x).s; }

}  // namespace semiwalk
