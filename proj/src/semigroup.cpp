#include "semiwalk/semigroup.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

namespace semiwalk {

const std::string kZeroName = "□";
const std::string kBarOne = "1̄";
const std::string kFlatOne = "1̃";

namespace {

// Number of base characters in a UTF-8 string, ignoring combining diacritics.
int glyph_count(std::string_view s) {
    int count = 0;
    for (std::size_t i = 0; i < s.size();) {
        unsigned char c = static_cast<unsigned char>(s[i]);
        std::size_t len = c < 0x80 ? 1 : (c >> 5) == 0x6 ? 2 : (c >> 4) == 0xE ? 3 : 4;
        char32_t cp = 0;
        if (len == 1) {
            cp = c;
        } else if (i + len <= s.size()) {
            cp = c & (0xFF >> (len + 1));
            for (std::size_t k = 1; k < len; ++k) cp = (cp << 6) | (static_cast<unsigned char>(s[i + k]) & 0x3F);
        }
        if (!(cp >= 0x300 && cp <= 0x36F)) ++count;
        i += len;
    }
    return count;
}

bool is_glyph_name(const std::string& n) {
    if (n.empty()) return false;
    std::string_view body = n;
    if (body.size() > 1 && body.front() == '-') body.remove_prefix(1);
    return glyph_count(body) == 1;
}

}  // namespace

std::string format_word(const std::vector<std::string>& names, const Word& w) {
    if (w.empty()) return "1";
    bool glyphs = std::all_of(names.begin(), names.end(), is_glyph_name);
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (!glyphs && i > 0) out += '.';
        out += names[static_cast<std::size_t>(w[i])];
    }
    return out;
}

Word parse_word(const std::vector<std::string>& names, std::string_view text) {
    Word w;
    if (text == "1" && std::find(names.begin(), names.end(), "1") == names.end()) return w;
    if (text.find('.') != std::string_view::npos) {
        std::size_t start = 0;
        while (start <= text.size()) {
            std::size_t end = text.find('.', start);
            if (end == std::string_view::npos) end = text.size();
            std::string_view tok = text.substr(start, end - start);
            auto it = std::find(names.begin(), names.end(), tok);
            if (it == names.end()) throw Error(ErrorCode::Parse, "unknown generator '" + std::string(tok) + "'");
            w.push_back(static_cast<int>(it - names.begin()));
            start = end + 1;
        }
        return w;
    }
    std::size_t pos = 0;
    while (pos < text.size()) {
        int best = -1;
        std::size_t best_len = 0;
        for (std::size_t a = 0; a < names.size(); ++a) {
            const std::string& n = names[a];
            if (n.size() > best_len && text.substr(pos, n.size()) == n) {
                best = static_cast<int>(a);
                best_len = n.size();
            }
        }
        if (best < 0) throw Error(ErrorCode::Parse, "cannot split word '" + std::string(text) + "' into generators");
        w.push_back(best);
        pos += best_len;
    }
    return w;
}

bool shortlex_less(const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

// ------------------------------------------------------------------ Semigroup

Semigroup Semigroup::build(std::vector<std::string> gen_names, const std::vector<int>& gen_elem,
                           const std::vector<std::vector<int>>& right, std::vector<std::string> labels,
                           const char* context) {
    const std::size_t n = right.size();
    const std::size_t k = gen_elem.size();
    if (k == 0) throw Error(ErrorCode::InvalidArgument, "no generators");
    if (gen_names.empty()) {
        for (std::size_t a = 0; a < k; ++a)
            gen_names.push_back(k <= 26 ? std::string(1, static_cast<char>('a' + a)) : "g" + std::to_string(a));
    }
    if (gen_names.size() != k) throw Error(ErrorCode::InvalidArgument, "generator name count mismatch");
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = a + 1; b < k; ++b)
            if (gen_names[a] == gen_names[b])
                throw Error(ErrorCode::InvalidArgument, "duplicate generator name '" + gen_names[a] + "'");
    for (int g : gen_elem)
        if (g < 0 || static_cast<std::size_t>(g) >= n) throw Error(ErrorCode::InvalidArgument, "generator out of range");

    std::vector<int> order;
    std::vector<int> canon(n, -1);
    std::vector<Word> reps;
    order.reserve(n);
    for (std::size_t a = 0; a < k; ++a) {
        int g = gen_elem[a];
        if (canon[static_cast<std::size_t>(g)] < 0) {
            canon[static_cast<std::size_t>(g)] = static_cast<int>(order.size());
            order.push_back(g);
            reps.push_back(Word{static_cast<int>(a)});
        }
    }
    for (std::size_t head = 0; head < order.size(); ++head) {
        int x = order[head];
        for (std::size_t a = 0; a < k; ++a) {
            int y = right[static_cast<std::size_t>(x)][a];
            if (canon[static_cast<std::size_t>(y)] < 0) {
                canon[static_cast<std::size_t>(y)] = static_cast<int>(order.size());
                order.push_back(y);
                Word w = reps[head];
                w.push_back(static_cast<int>(a));
                reps.push_back(std::move(w));
            }
        }
    }
    if (order.size() != n)
        throw Error(ErrorCode::GeneratorsDoNotGenerate, std::string(context) + ": generators reach " +
                                                            std::to_string(order.size()) + " of " +
                                                            std::to_string(n) + " elements");

    Semigroup S;
    S.names_ = std::move(gen_names);
    S.gen_elem_.resize(k);
    for (std::size_t a = 0; a < k; ++a) S.gen_elem_[a] = canon[static_cast<std::size_t>(gen_elem[a])];
    S.right_.assign(n, std::vector<int>(k));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t a = 0; a < k; ++a)
            S.right_[i][a] = canon[static_cast<std::size_t>(right[static_cast<std::size_t>(order[i])][a])];
    S.reps_ = std::move(reps);
    S.input_index_ = order;
    S.labels_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t src = static_cast<std::size_t>(order[i]);
        S.labels_[i] = src < labels.size() ? labels[src] : format_word(S.names_, S.reps_[i]);
    }
    S.compute_left();
    return S;
}

void Semigroup::compute_left() {
    left_.assign(gen_elem_.size(), std::vector<int>(right_.size()));
    for (std::size_t a = 0; a < gen_elem_.size(); ++a)
        for (std::size_t x = 0; x < right_.size(); ++x)
            left_[a][x] = act(gen_elem_[a], reps_[x]);
}

namespace {

void validate_table(const std::vector<std::vector<int>>& table, const std::vector<int>& gens) {
    const std::size_t n = table.size();
    if (n == 0) throw Error(ErrorCode::InvalidArgument, "empty table");
    for (const auto& row : table) {
        if (row.size() != n) throw Error(ErrorCode::InvalidArgument, "table is not square");
        for (int v : row)
            if (v < 0 || static_cast<std::size_t>(v) >= n) throw Error(ErrorCode::InvalidArgument, "table entry out of range");
    }
    if (gens.empty()) throw Error(ErrorCode::InvalidArgument, "no generators");
}

std::vector<std::vector<int>> generator_columns(const std::vector<std::vector<int>>& table,
                                                const std::vector<int>& gens) {
    std::vector<std::vector<int>> right(table.size(), std::vector<int>(gens.size()));
    for (std::size_t x = 0; x < table.size(); ++x)
        for (std::size_t a = 0; a < gens.size(); ++a) right[x][a] = table[x][static_cast<std::size_t>(gens[a])];
    return right;
}

}  // namespace

Semigroup Semigroup::from_table(const std::vector<std::vector<int>>& table, const std::vector<int>& gens,
                                std::vector<std::string> gen_names, std::vector<std::string> labels) {
    validate_table(table, gens);
    const std::size_t n = table.size();
    for (int g : gens)
        if (g < 0 || static_cast<std::size_t>(g) >= n) throw Error(ErrorCode::InvalidArgument, "generator out of range");
    // Light's test against generators; sufficient once the generators generate.
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            const std::size_t xy = static_cast<std::size_t>(table[x][y]);
            for (int g : gens) {
                const std::size_t gi = static_cast<std::size_t>(g);
                if (table[xy][gi] != table[x][static_cast<std::size_t>(table[y][gi])])
                    throw Error(ErrorCode::NotAssociative, "(" + std::to_string(x) + "*" + std::to_string(y) + ")*" +
                                                               std::to_string(g) + " != " + std::to_string(x) + "*(" +
                                                               std::to_string(y) + "*" + std::to_string(g) + ")");
            }
        }
    return build(std::move(gen_names), gens, generator_columns(table, gens), std::move(labels), "table");
}

Semigroup Semigroup::from_table_unchecked(const std::vector<std::vector<int>>& table, const std::vector<int>& gens,
                                          std::vector<std::string> gen_names, std::vector<std::string> labels) {
    validate_table(table, gens);
    Semigroup S = build(std::move(gen_names), gens, generator_columns(table, gens), std::move(labels), "table");
    // Keep the table's own left action so inconsistencies stay visible to chain checks.
    std::vector<int> canon(S.size());
    for (std::size_t i = 0; i < S.size(); ++i) canon[static_cast<std::size_t>(S.input_index_[i])] = static_cast<int>(i);
    for (std::size_t a = 0; a < gens.size(); ++a)
        for (std::size_t x = 0; x < S.size(); ++x)
            S.left_[a][x] = canon[static_cast<std::size_t>(
                table[static_cast<std::size_t>(gens[a])][static_cast<std::size_t>(S.input_index_[x])])];
    return S;
}

Semigroup Semigroup::from_transformations(int states, std::vector<std::string> gen_names,
                                          const std::vector<std::vector<int>>& maps, std::size_t cap) {
    if (states <= 0) throw Error(ErrorCode::InvalidArgument, "state count must be positive");
    for (const auto& m : maps) {
        if (static_cast<int>(m.size()) != states) throw Error(ErrorCode::InvalidArgument, "map is not total");
        for (int q : m)
            if (q < 0 || q >= states) throw Error(ErrorCode::InvalidArgument, "map image out of range");
    }
    auto compose = [](const std::vector<int>& f, const std::vector<int>& g) {
        std::vector<int> h(f.size());
        for (std::size_t q = 0; q < f.size(); ++q) h[q] = g[static_cast<std::size_t>(f[q])];
        return h;
    };
    auto label = [](const std::vector<int>& f) {
        std::string s = "[";
        for (std::size_t q = 0; q < f.size(); ++q) s += (q ? "," : "") + std::to_string(f[q]);
        return s + "]";
    };
    return generate(std::move(gen_names), maps, compose, label, cap);
}

Semigroup Semigroup::from_right_action(std::vector<std::string> gen_names, const std::vector<int>& gen_elem,
                                       const std::vector<std::vector<int>>& right, std::vector<std::string> labels) {
    for (const auto& row : right) {
        if (row.size() != gen_elem.size()) throw Error(ErrorCode::InvalidArgument, "right action row size mismatch");
        for (int v : row)
            if (v < 0 || static_cast<std::size_t>(v) >= right.size())
                throw Error(ErrorCode::InvalidArgument, "right action entry out of range");
    }
    return build(std::move(gen_names), gen_elem, right, std::move(labels), "right action");
}

int Semigroup::generator_index(std::string_view name) const {
    for (std::size_t a = 0; a < names_.size(); ++a)
        if (names_[a] == name) return static_cast<int>(a);
    return -1;
}

int Semigroup::act(int x, const Word& w) const {
    for (int a : w) x = right(x, a);
    return x;
}

int Semigroup::multiply(int u, int v) const { return act(u, rep(v)); }

int Semigroup::product(const Word& w) const {
    if (w.empty()) throw Error(ErrorCode::InvalidArgument, "empty word has no value in S");
    Word tail(w.begin() + 1, w.end());
    return act(generator(w.front()), tail);
}

bool Semigroup::is_associative() const {
    const int n = static_cast<int>(size());
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            int xy = multiply(x, y);
            for (int z = 0; z < n; ++z)
                if (multiply(xy, z) != multiply(x, multiply(y, z))) return false;
        }
    return true;
}

// --------------------------------------------------------------------- ideals

std::vector<int> principal_ideal(const Semigroup& S, int x) {
    std::vector<char> seen(S.size(), 0);
    std::vector<int> stack{x}, out;
    seen[static_cast<std::size_t>(x)] = 1;
    while (!stack.empty()) {
        int y = stack.back();
        stack.pop_back();
        out.push_back(y);
        for (int a = 0; a < S.num_generators(); ++a) {
            for (int z : {S.right(y, a), S.left(a, y)}) {
                if (!seen[static_cast<std::size_t>(z)]) {
                    seen[static_cast<std::size_t>(z)] = 1;
                    stack.push_back(z);
                }
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> minimal_ideal(const Semigroup& S) {
    // The product of all elements lies in every ideal.
    int z = 0;
    for (int x = 1; x < static_cast<int>(S.size()); ++x) z = S.multiply(z, x);
    return principal_ideal(S, z);
}

std::vector<char> membership(const Semigroup& S, const std::vector<int>& ideal) {
    std::vector<char> m(S.size(), 0);
    for (int x : ideal) m[static_cast<std::size_t>(x)] = 1;
    return m;
}

bool is_ideal(const Semigroup& S, const std::vector<int>& members) {
    if (members.empty()) return false;
    auto in = membership(S, members);
    for (int x : members)
        for (int a = 0; a < S.num_generators(); ++a)
            if (!in[static_cast<std::size_t>(S.right(x, a))] || !in[static_cast<std::size_t>(S.left(a, x))]) return false;
    return true;
}

bool is_left_zero(const Semigroup& S, const std::vector<int>& ideal) {
    // For an ideal I, xy = x on I is equivalent to xa = x for x in I and every generator a.
    for (int x : ideal)
        for (int a = 0; a < S.num_generators(); ++a)
            if (S.right(x, a) != x) return false;
    return true;
}

// --------------------------------------------------------------- constructions

Semigroup rees_quotient(const Semigroup& S, const std::vector<int>& ideal) {
    auto in = membership(S, ideal);
    const int Z = -1;
    auto collapse = [&](int x) { return x == Z || in[static_cast<std::size_t>(x)] ? Z : x; };
    std::vector<int> gens;
    for (int a = 0; a < S.num_generators(); ++a) gens.push_back(collapse(S.generator(a)));
    auto mul = [&](int u, int v) { return (u == Z || v == Z) ? Z : collapse(S.multiply(u, v)); };
    auto label = [&](int x) { return x == Z ? std::string("0") : S.label(x); };
    return Semigroup::generate(S.generator_names(), gens, mul, label);
}

Semigroup adjoin_zero(const Semigroup& S, const std::string& zero_name) {
    const int Z = -1;
    std::vector<int> gens;
    for (int a = 0; a < S.num_generators(); ++a) gens.push_back(S.generator(a));
    gens.push_back(Z);
    auto names = S.generator_names();
    names.push_back(zero_name);
    auto mul = [&](int u, int v) { return (u == Z || v == Z) ? Z : S.multiply(u, v); };
    auto label = [&](int x) { return x == Z ? zero_name : S.label(x); };
    return Semigroup::generate(std::move(names), gens, mul, label);
}

Semigroup opposite(const Semigroup& S) {
    std::vector<int> gens;
    for (int a = 0; a < S.num_generators(); ++a) gens.push_back(S.generator(a));
    auto mul = [&](int u, int v) { return S.multiply(v, u); };
    auto label = [&](int x) { return S.label(x); };
    return Semigroup::generate(S.generator_names(), gens, mul, label);
}

namespace {

// Tagged element: {0, x} is x in S; {1, x} is the decorated copy of x, with x = -1 for the decorated identity.
using Tagged = std::pair<int, int>;

// Stacks further combining marks until the name is unused, so towers stay unambiguous.
std::string fresh_name(const Semigroup& S, std::string name, const std::string& mark) {
    while (S.generator_index(name) >= 0) name += mark;
    return name;
}

std::vector<Tagged> tagged_generators(const Semigroup& S) {
    std::vector<Tagged> gens;
    for (int a = 0; a < S.num_generators(); ++a) gens.push_back({0, S.generator(a)});
    gens.push_back({1, -1});
    return gens;
}

}  // namespace

Semigroup bar(const Semigroup& S) {
    const std::string one = fresh_name(S, kBarOne, "\u0304");
    auto mul = [&](const Tagged& u, const Tagged& v) -> Tagged {
        if (v.first == 1) return v;                       // x·ȳ = ȳ, x̄·ȳ = ȳ, z·1̄ = 1̄
        if (u.first == 0) return {0, S.multiply(u.second, v.second)};
        if (u.second < 0) return {1, v.second};           // 1̄·y = ȳ
        return {1, S.multiply(u.second, v.second)};       // x̄·y = (xy)‾
    };
    auto label = [&](const Tagged& t) {
        if (t.first == 0) return S.label(t.second);
        return t.second < 0 ? one : "bar(" + S.label(t.second) + ")";
    };
    auto names = S.generator_names();
    names.push_back(one);
    return Semigroup::generate(std::move(names), tagged_generators(S), mul, label);
}

Semigroup flat(const Semigroup& S) {
    const std::string one = fresh_name(S, kFlatOne, "\u0303");
    auto mul = [&](const Tagged& u, const Tagged& v) -> Tagged {
        if (u.first == 1) return u;                       // ỹ·x = ỹ, ỹ·x̃ = ỹ, 1̃·z = 1̃
        if (v.first == 0) return {0, S.multiply(u.second, v.second)};
        if (v.second < 0) return {1, u.second};           // z·1̃ = z̃
        return {1, S.multiply(u.second, v.second)};       // y·x̃ = (yx)~
    };
    auto label = [&](const Tagged& t) {
        if (t.first == 0) return S.label(t.second);
        return t.second < 0 ? one : "flat(" + S.label(t.second) + ")";
    };
    auto names = S.generator_names();
    names.push_back(one);
    return Semigroup::generate(std::move(names), tagged_generators(S), mul, label);
}

bool isomorphic(const Semigroup& S, const Semigroup& T) {
    if (S.size() != T.size() || S.num_generators() != T.num_generators()) return false;
    std::vector<int> fwd(S.size(), -1), bwd(T.size(), -1);
    std::deque<int> queue;
    auto pair_up = [&](int s, int t) {
        if (fwd[static_cast<std::size_t>(s)] < 0 && bwd[static_cast<std::size_t>(t)] < 0) {
            fwd[static_cast<std::size_t>(s)] = t;
            bwd[static_cast<std::size_t>(t)] = s;
            queue.push_back(s);
            return true;
        }
        return fwd[static_cast<std::size_t>(s)] == t;
    };
    for (int a = 0; a < S.num_generators(); ++a)
        if (!pair_up(S.generator(a), T.generator(a))) return false;
    while (!queue.empty()) {
        int s = queue.front();
        queue.pop_front();
        int t = fwd[static_cast<std::size_t>(s)];
        for (int a = 0; a < S.num_generators(); ++a)
            if (!pair_up(S.right(s, a), T.right(t, a))) return false;
    }
    return true;
}

}  // namespace semiwalk
