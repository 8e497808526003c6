#include "semiwalk/families.hpp"

#include "semiwalk/cayley.hpp"
#include "semiwalk/expansions.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <map>
#include <numeric>

namespace semiwalk {

namespace {

std::vector<std::string> numeric_names(int n) {
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i) names.push_back(std::to_string(i));
    return names;
}

std::vector<std::string> signed_names(int n) {
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i) {
        names.push_back(std::to_string(i));
        names.push_back("-" + std::to_string(i));
    }
    return names;
}

std::vector<std::string> letter_names(int n) {
    if (n > 26) throw Error(ErrorCode::InvalidArgument, "at most 26 letter generators");
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
    return names;
}

void require(bool ok, const std::string& what) {
    if (!ok) throw Error(ErrorCode::InvalidArgument, what);
}

std::string mask_label(unsigned mask, int n) {
    std::string s;
    for (int i = 0; i < n; ++i)
        if (mask >> i & 1u) s += std::to_string(i + 1);
    return "{" + s + "}";
}

template <class F>
void for_each_permutation(int n, F f) {
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    do f(p);
    while (std::next_permutation(p.begin(), p.end()));
}

Rational power(const Rational& x, int e) {
    Rational r = 1;
    for (int i = 0; i < e; ++i) r *= x;
    return r;
}

void append(Distribution& d, std::string key, Rational value) {
    d.keys.push_back(std::move(key));
    d.values.push_back(std::move(value));
}

}  // namespace

// ------------------------------------------------------------------ builders

Semigroup tsetlin(int n) {
    require(n >= 1 && n <= 12, "tsetlin needs 1 <= n <= 12");
    std::vector<unsigned> gens;
    for (int i = 0; i < n; ++i) gens.push_back(1u << i);
    return Semigroup::generate(
        numeric_names(n), gens, [](unsigned x, unsigned y) { return x | y; },
        [n](unsigned x) { return mask_label(x, n); });
}

Semigroup signed_tsetlin(int n) {
    require(n >= 1 && n <= 8, "signed_tsetlin needs 1 <= n <= 8");
    using Signed = std::pair<unsigned, unsigned>;  // positive mask, negative mask
    std::vector<Signed> gens;
    for (int i = 0; i < n; ++i) {
        gens.push_back({1u << i, 0u});
        gens.push_back({0u, 1u << i});
    }
    auto mul = [](const Signed& x, const Signed& y) -> Signed {
        unsigned used = x.first | x.second;
        return {x.first | (y.first & ~used), x.second | (y.second & ~used)};
    };
    auto label = [n](const Signed& x) {
        std::string s;
        for (int i = 0; i < n; ++i) {
            if (x.first >> i & 1u) s += (s.empty() ? "" : ",") + std::to_string(i + 1);
            if (x.second >> i & 1u) s += (s.empty() ? "-" : ",-") + std::to_string(i + 1);
        }
        return "{" + s + "}";
    };
    return Semigroup::generate(signed_names(n), gens, mul, label);
}

Semigroup rees_zp(int n, int p) {
    require(n >= 1 && n <= 26 && p >= 1, "rees_zp needs 1 <= n <= 26 and p >= 1");
    // (i, g, j) with g in Z_p written additively; (-1,-1,-1) is the zero.
    using Triple = std::array<int, 3>;
    const Triple zero{-1, -1, -1};
    std::vector<Triple> gens;
    for (int i = 0; i < n; ++i) gens.push_back({i, i + 1 == n ? 1 % p : 0, (i + 1) % n});
    auto mul = [&](const Triple& x, const Triple& y) -> Triple {
        if (x == zero || y == zero || x[2] != y[0]) return zero;
        return {x[0], (x[1] + y[1]) % p, y[2]};
    };
    auto label = [&](const Triple& x) {
        if (x == zero) return kZeroName;
        return "(" + std::to_string(x[0] + 1) + "," + std::to_string(x[1]) + "," + std::to_string(x[2] + 1) + ")";
    };
    return Semigroup::generate(letter_names(n), gens, mul, label);
}

Semigroup rees_B(int n) { return rees_zp(n, 1); }

Semigroup rees_general() {
    // (i, g, j) over Z_2 = {1, -1} with sandwich matrix p_{2,2} = -1, all other entries 1.
    using Triple = std::array<int, 3>;
    auto sandwich = [](int j, int i) { return (j == 2 && i == 2) ? -1 : 1; };
    std::vector<Triple> gens{{1, 1, 2}, {2, 1, 1}};
    auto mul = [&](const Triple& x, const Triple& y) -> Triple {
        return {x[0], x[1] * sandwich(x[2], y[0]) * y[1], y[2]};
    };
    auto label = [](const Triple& x) {
        return "(" + std::to_string(x[0]) + "," + std::to_string(x[1]) + "," + std::to_string(x[2]) + ")";
    };
    return Semigroup::generate(letter_names(2), gens, mul, label);
}

Semigroup klein() {
    using Pair = std::pair<int, int>;
    std::vector<Pair> gens{{1, -1}, {-1, 1}};
    return Semigroup::generate(
        letter_names(2), gens, [](const Pair& x, const Pair& y) { return Pair{x.first * y.first, x.second * y.second}; },
        [](const Pair& x) { return "(" + std::to_string(x.first) + "," + std::to_string(x.second) + ")"; });
}

Semigroup flipflop() {
    // 0·x = 0, 1·x = x
    return Semigroup::from_table({{0, 0}, {0, 1}}, {0, 1}, {"0", "1"}, {"0", "1"});
}

Semigroup z2x01() {
    // Z_2 = {1, z} as {0, 1} under addition, times {0, 1} under multiplication.
    using Pair = std::pair<int, int>;
    std::vector<Pair> gens{{1, 0}, {1, 1}};
    return Semigroup::generate(
        letter_names(2), gens, [](const Pair& x, const Pair& y) { return Pair{(x.first + y.first) % 2, x.second * y.second}; },
        [](const Pair& x) { return std::string("(") + (x.first ? "z" : "1") + "," + std::to_string(x.second) + ")"; });
}

Semigroup burnside_straightline(int n) {
    require(n >= 1 && n <= 50, "burnside_straightline needs 1 <= n <= 50");
    // Alternating words over {a, b} of length 1..2n+1 plus the sink (empty string).
    const std::size_t cap = static_cast<std::size_t>(2 * n + 1);
    auto mul = [cap](const std::string& x, const std::string& y) -> std::string {
        if (x.empty() || y.empty() || x.back() == y.front()) return std::string();
        std::string w = x + y;
        for (std::size_t i = 1; i < w.size(); ++i)
            if (w[i] == w[i - 1]) return std::string();
        while (w.size() > cap) w.resize(w.size() - 2);
        return w;
    };
    auto label = [](const std::string& x) { return x.empty() ? kZeroName : x; };
    return Semigroup::generate(letter_names(2), std::vector<std::string>{"a", "b"}, mul, label);
}

Semigroup bar_tower(int depth) {
    require(depth >= 0 && depth <= 3, "bar_tower needs 0 <= depth <= 3");
    Semigroup S = karnofsky_rhodes(tsetlin(2)).semigroup();
    for (int i = 0; i < depth; ++i) S = karnofsky_rhodes(bar(S)).semigroup();
    return S;
}

Semigroup flat_tower(int depth) {
    require(depth >= 0 && depth <= 3, "flat_tower needs 0 <= depth <= 3");
    Semigroup S = karnofsky_rhodes(tsetlin(2)).semigroup();
    for (int i = 0; i < depth; ++i) S = karnofsky_rhodes(bar(S)).semigroup();
    return flat(S);
}

Semigroup counterexample() {
    const int Z = 4;
    std::vector<std::vector<int>> maps{
        {1, Z, Z, 2, Z},  // a1: 0->1, 3->2
        {Z, 2, 1, Z, Z},  // a2: 1->2, 2->1
        {Z, 3, 3, Z, Z},  // a3: 1->3, 2->3
        {0, 0, 3, 0, Z},  // c: 0->0, 1->0, 2->3, 3->0
    };
    return Semigroup::from_transformations(5, {"a₁", "a₂", "a₃", "c"}, maps);
}

// -------------------------------------------------------------- closed forms

Distribution tsetlin_closed_form(int n, const std::vector<Rational>& x) {
    const auto names = numeric_names(n);
    Distribution d;
    for_each_permutation(n, [&](const std::vector<int>& p) {
        Rational value = 1, used = 0;
        for (int i : p) {
            value *= x[static_cast<std::size_t>(i)] / (Rational(1) - used);
            used += x[static_cast<std::size_t>(i)];
        }
        append(d, format_word(names, p), value);
    });
    return d;
}

namespace {

template <class F>
void for_each_signed_permutation(int n, F f) {
    for_each_permutation(n, [&](const std::vector<int>& p) {
        for (unsigned signs = 0; signs < (1u << n); ++signs) {
            Word w;
            for (int i = 0; i < n; ++i) w.push_back(2 * p[static_cast<std::size_t>(i)] + static_cast<int>(signs >> i & 1u));
            f(w);
        }
    });
}

Rational signed_value(const Word& w, const std::vector<Rational>& y) {
    Rational value = 1, used = 0;
    for (int g : w) {
        value *= y[static_cast<std::size_t>(g)] / (Rational(1) - used);
        used += y[static_cast<std::size_t>(g & ~1)] + y[static_cast<std::size_t>(g | 1)];
    }
    return value;
}

}  // namespace

Distribution signed_tsetlin_closed_form(int n, const std::vector<Rational>& y) {
    const auto names = signed_names(n);
    Distribution d;
    for_each_signed_permutation(n, [&](const Word& w) { append(d, format_word(names, w), signed_value(w, y)); });
    return d;
}

std::string edge_flip_state(int n, const Word& w) {
    std::string s(static_cast<std::size_t>(n + 1), '0');
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        std::size_t edge = static_cast<std::size_t>(*it / 2);
        char bit = (*it % 2) ? '1' : '0';
        s[edge] = s[edge + 1] = bit;
    }
    return s;
}

namespace {

std::vector<std::string> bit_strings(int len) {
    std::vector<std::string> out;
    for (unsigned m = 0; m < (1u << len); ++m) {
        std::string s;
        for (int i = len - 1; i >= 0; --i) s += (m >> i & 1u) ? '1' : '0';
        out.push_back(s);
    }
    return out;
}

}  // namespace

Distribution edge_flip_closed_form(int n, const std::vector<Rational>& y) {
    std::map<std::string, Rational> mass;
    for (const std::string& s : bit_strings(n + 1)) mass[s] = 0;
    for_each_signed_permutation(n, [&](const Word& w) { mass[edge_flip_state(n, w)] += signed_value(w, y); });
    Distribution d;
    for (auto& [k, v] : mass) append(d, k, v);
    return d;
}

std::vector<Rational> edge_flip_probabilities(const std::vector<Rational>& x, const Rational& p) {
    std::vector<Rational> y;
    for (const Rational& v : x) {
        y.push_back(p * v);
        y.push_back((Rational(1) - p) * v);
    }
    return y;
}

Distribution rees_zp_closed_form(int n, int p, const std::vector<Rational>& x) {
    const auto names = letter_names(n);
    Rational cycle = 1;
    for (const Rational& v : x) cycle *= v;
    const Rational denom = Rational(1) - power(cycle, p);
    Distribution d;
    for (int k = 0; k < n; ++k)
        for (int j = 1; j <= n * p; ++j)
            for (int i = 0; i < n; ++i) {
                if (i == (k + j) % n) continue;
                Word w;
                Rational value = 1;
                for (int m = 0; m < j; ++m) w.push_back((k + m) % n);
                w.push_back(i);
                for (int a : w) value *= x[static_cast<std::size_t>(a)];
                append(d, format_word(names, w), value / denom);
            }
    return d;
}

Distribution rees_general_closed_form(const std::vector<Rational>& x) {
    const Rational& a = x[0];
    const Rational& b = x[1];
    const Rational half(1, 2);
    Distribution d;
    append(d, "a", half * a * a);
    append(d, "ab", half * a * b);
    append(d, "aba", half * a * a);
    append(d, "abab", half * a * b);
    append(d, "b", half * b * b);
    append(d, "ba", half * a * b);
    append(d, "bab", half * b * b);
    append(d, "baba", half * a * b);
    return d;
}

Distribution burnside_closed_form(int n, const std::vector<Rational>& x) {
    Distribution d;
    for (int flip = 0; flip < 2; ++flip) {
        const char p = flip ? 'b' : 'a', q = flip ? 'a' : 'b';
        const Rational& xp = x[static_cast<std::size_t>(flip)];
        const Rational& xq = x[static_cast<std::size_t>(1 - flip)];
        const Rational loop = Rational(1) / (Rational(1) - xp * xq);
        std::string prefix;
        for (int j = 0; j <= n; ++j) {
            // prefix = (pq)^j
            const Rational scale = j == n ? loop : Rational(1);
            if (j > 0) append(d, prefix + q, power(xp, j) * power(xq, j + 1) * scale);
            append(d, prefix + p + p, power(xp, j + 2) * power(xq, j) * scale);
            prefix += p;
            prefix += q;
        }
    }
    return d;
}

bool is_r_trivial(const Semigroup& S) {
    const RootedGraph G = right_cayley(S);
    const Components C = strongly_connected_components(G);
    return std::all_of(C.members.begin(), C.members.end(), [](const std::vector<int>& m) { return m.size() == 1; });
}

Distribution r_trivial_closed_form(const Semigroup& S, const std::vector<Rational>& x) {
    require(is_r_trivial(S), "semigroup is not R-trivial");
    const Analysis A = analyze(S);
    Distribution d;
    for (const NormalForm& nf : A.normal_forms) {
        Rational value = 1;
        int e = -1;
        for (std::size_t i = 0; i < nf.word.size(); ++i) {
            const int a = nf.word[i];
            Rational stable = 0;
            // N_{i-1}: generators fixing the prefix before this letter (empty at the root).
            if (e >= 0)
                for (int b = 0; b < S.num_generators(); ++b)
                    if (S.right(e, b) == e) stable += x[static_cast<std::size_t>(b)];
            value *= x[static_cast<std::size_t>(a)] / (Rational(1) - stable);
            e = e < 0 ? S.generator(a) : S.right(e, a);
        }
        append(d, S.word_string(nf.word), value);
    }
    return d;
}

// ------------------------------------------------------------------ registry

namespace {

std::vector<int> parse_params(std::string_view text) {
    std::vector<int> out;
    std::size_t start = 0;
    while (start <= text.size() && !text.empty()) {
        std::size_t end = text.find(',', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view item = text.substr(start, end - start);
        int v = 0;
        auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
        if (ec != std::errc() || ptr != item.data() + item.size() || item.empty())
            throw Error(ErrorCode::Parse, "bad family parameter '" + std::string(item) + "'");
        out.push_back(v);
        start = end + 1;
    }
    return out;
}

Distribution over_all_bitstrings(const Distribution& d, const std::vector<std::string>& keys) {
    Distribution out;
    for (const std::string& k : keys) append(out, k, d.at(k));
    return out;
}

}  // namespace

std::vector<std::string> family_names() {
    return {"tsetlin",  "signed_tsetlin", "edge_flip_line", "rees_B",     "rees_zp",        "rees_general",
            "klein",    "flipflop",       "z2x01",          "z2x01_quotient", "burnside_straightline",
            "bar_tower", "flat_tower",    "counterexample"};
}

Family make_family(std::string_view spec) {
    const std::size_t colon = spec.find(':');
    const std::string name(spec.substr(0, colon));
    const std::vector<int> params = colon == std::string_view::npos ? std::vector<int>{} : parse_params(spec.substr(colon + 1));
    auto want = [&](std::size_t count, std::vector<int> defaults) {
        if (params.size() > count) throw Error(ErrorCode::Parse, "too many parameters for family '" + name + "'");
        for (std::size_t i = 0; i < params.size(); ++i) defaults[i] = params[i];
        if (defaults.size() != count || std::find(defaults.begin(), defaults.end(), -1) != defaults.end())
            throw Error(ErrorCode::Parse, "family '" + name + "' needs " + std::to_string(count) + " parameter(s)");
        return defaults;
    };
    auto canonical = [&](const std::vector<int>& p) {
        std::string s = name;
        for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : ":") + std::to_string(p[i]);
        return s;
    };

    Family F;
    if (name == "tsetlin") {
        auto p = want(1, {-1});
        int n = p[0];
        F.name = canonical(p);
        F.semigroup = tsetlin(n);
        F.closed_form = [n](const std::vector<Rational>& x) { return tsetlin_closed_form(n, x); };
    } else if (name == "signed_tsetlin") {
        auto p = want(1, {-1});
        int n = p[0];
        F.name = canonical(p);
        F.semigroup = signed_tsetlin(n);
        F.closed_form = [n](const std::vector<Rational>& y) { return signed_tsetlin_closed_form(n, y); };
    } else if (name == "edge_flip_line") {
        auto p = want(1, {-1});
        int n = p[0];
        require(n >= 1 && n <= 8, "edge_flip_line needs 1 <= n <= 8");
        F.name = canonical(p);
        F.semigroup = signed_tsetlin(n);
        F.level = Level::Lumped;
        F.lump = [n](const Word& w) { return edge_flip_state(n, w); };
        F.lump_keys = bit_strings(n + 1);
        F.closed_form = [n](const std::vector<Rational>& y) { return edge_flip_closed_form(n, y); };
    } else if (name == "rees_B") {
        auto p = want(1, {-1});
        int n = p[0];
        F.name = canonical(p);
        F.semigroup = rees_B(n);
        F.closed_form = [n](const std::vector<Rational>& x) { return rees_zp_closed_form(n, 1, x); };
    } else if (name == "rees_zp") {
        auto p = want(2, {-1, -1});
        int n = p[0], q = p[1];
        F.name = canonical(p);
        F.semigroup = rees_zp(n, q);
        F.closed_form = [n, q](const std::vector<Rational>& x) { return rees_zp_closed_form(n, q, x); };
    } else if (name == "rees_general") {
        want(0, {});
        F.name = name;
        F.semigroup = rees_general();
        F.closed_form = rees_general_closed_form;
    } else if (name == "klein") {
        want(0, {});
        F.name = name;
        F.semigroup = klein();
        F.level = Level::S;
        F.closed_form = [](const std::vector<Rational>&) {
            Distribution d;
            for (const char* k : {"a", "b", "aa", "ab"}) append(d, k, Rational(1, 4));
            return d;
        };
    } else if (name == "flipflop") {
        want(0, {});
        F.name = name;
        F.semigroup = flipflop();
        F.closed_form = [](const std::vector<Rational>& x) {
            Distribution d;
            append(d, "0", x[0]);
            append(d, "10", x[1]);
            return d;
        };
    } else if (name == "z2x01") {
        want(0, {});
        F.name = name;
        F.semigroup = z2x01();
        F.level = Level::S;
        F.closed_form = [](const std::vector<Rational>&) {
            Distribution d;
            append(d, "a", Rational(1, 2));
            append(d, "aa", Rational(1, 2));
            return d;
        };
    } else if (name == "z2x01_quotient") {
        want(0, {});
        F.name = name;
        const Semigroup S = z2x01();
        F.semigroup = rees_quotient(S, minimal_ideal(S));
        F.closed_form = [](const std::vector<Rational>& x) {
            const Rational& a = x[0];
            const Rational& b = x[1];
            const Rational loop = Rational(1) - b * b;
            Distribution d;
            append(d, "a", a);
            append(d, "ba", a * b / loop);
            append(d, "bba", a * b * b / loop);
            return d;
        };
    } else if (name == "burnside_straightline") {
        auto p = want(1, {-1});
        int n = p[0];
        F.name = canonical(p);
        F.semigroup = burnside_straightline(n);
        F.closed_form = [n](const std::vector<Rational>& x) { return burnside_closed_form(n, x); };
    } else if (name == "bar_tower") {
        auto p = want(1, {1});
        F.name = canonical(p);
        F.semigroup = bar_tower(p[0]);
    } else if (name == "flat_tower") {
        auto p = want(1, {1});
        F.name = canonical(p);
        F.semigroup = flat_tower(p[0]);
    } else if (name == "counterexample") {
        want(0, {});
        F.name = name;
        F.semigroup = counterexample();
    } else {
        throw Error(ErrorCode::Parse, "unknown family '" + name + "'");
    }
    if (F.level == Level::Lumped) {
        auto inner = F.closed_form;
        auto keys = F.lump_keys;
        F.closed_form = [inner, keys](const std::vector<Rational>& x) { return over_all_bitstrings(inner(x), keys); };
    }
    return F;
}

Distribution family_distribution(const Family& F, const std::vector<Rational>& x) {
    const StationaryResult R = stationary(F.semigroup, x);
    if (F.level == Level::S) return R.s;
    if (F.level == Level::KR) return R.kr;
    const KRExpansion kr = karnofsky_rhodes(F.semigroup);
    std::map<std::string, Rational> mass;
    for (const std::string& k : F.lump_keys) mass[k] = 0;
    for (std::size_t i = 0; i < R.kr.size(); ++i)
        mass[F.lump(kr.graph.word[static_cast<std::size_t>(R.kr_vertices[i])])] += R.kr.values[i];
    Distribution d;
    for (const std::string& k : F.lump_keys) append(d, k, mass[k]);
    return d;
}

}  // namespace semiwalk
