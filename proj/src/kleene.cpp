#include "semiwalk/kleene.hpp"

#include "semiwalk/semigroup.hpp"

#include <algorithm>

namespace semiwalk {

namespace kleene {

namespace {

Expr make(KleeneNode::Kind kind, int letter, std::vector<Expr> kids) {
    auto n = std::make_shared<KleeneNode>();
    n->kind = kind;
    n->letter = letter;
    n->kids = std::move(kids);
    return n;
}

}  // namespace

Expr epsilon() {
    static const Expr eps = make(KleeneNode::Kind::Epsilon, -1, {});
    return eps;
}

Expr letter(int a) { return make(KleeneNode::Kind::Letter, a, {}); }

Expr concat(const std::vector<Expr>& parts) {
    std::vector<Expr> flat;
    for (const Expr& p : parts) {
        if (p->kind == KleeneNode::Kind::Epsilon) continue;
        if (p->kind == KleeneNode::Kind::Concat)
            flat.insert(flat.end(), p->kids.begin(), p->kids.end());
        else
            flat.push_back(p);
    }
    if (flat.empty()) return epsilon();
    if (flat.size() == 1) return flat.front();
    return make(KleeneNode::Kind::Concat, -1, std::move(flat));
}

Expr concat(const Expr& x, const Expr& y) { return concat(std::vector<Expr>{x, y}); }

Expr unite(const std::vector<Expr>& parts) {
    std::vector<Expr> flat;
    for (const Expr& p : parts) {
        if (p->kind == KleeneNode::Kind::Union)
            flat.insert(flat.end(), p->kids.begin(), p->kids.end());
        else
            flat.push_back(p);
    }
    if (flat.size() == 1) return flat.front();
    std::stable_sort(flat.begin(), flat.end(), [](const Expr& x, const Expr& y) {
        bool lx = x->kind == KleeneNode::Kind::Letter, ly = y->kind == KleeneNode::Kind::Letter;
        if (lx != ly) return lx;
        return lx && x->letter < y->letter;
    });
    return make(KleeneNode::Kind::Union, -1, std::move(flat));
}

Expr unite(const Expr& x, const Expr& y) { return unite(std::vector<Expr>{x, y}); }

Expr star(const Expr& x) {
    if (x->kind == KleeneNode::Kind::Epsilon) return x;
    return make(KleeneNode::Kind::Star, -1, {x});
}

Expr word(const std::vector<int>& letters) {
    std::vector<Expr> parts;
    for (int a : letters) parts.push_back(letter(a));
    return concat(parts);
}

}  // namespace kleene

namespace {

using Kind = KleeneNode::Kind;

void print(const Expr& e, const std::vector<std::string>& names, bool multi_glyph, std::string& out) {
    switch (e->kind) {
        case Kind::Epsilon: out += "ε"; return;
        case Kind::Letter: out += names[static_cast<std::size_t>(e->letter)]; return;
        case Kind::Concat:
            for (std::size_t i = 0; i < e->kids.size(); ++i) {
                if (multi_glyph && i > 0) out += '.';
                const Expr& k = e->kids[i];
                if (k->kind == Kind::Concat) {
                    out += '(';
                    print(k, names, multi_glyph, out);
                    out += ')';
                } else {
                    print(k, names, multi_glyph, out);
                }
            }
            return;
        case Kind::Union:
            out += '{';
            for (std::size_t i = 0; i < e->kids.size(); ++i) {
                if (i) out += ',';
                print(e->kids[i], names, multi_glyph, out);
            }
            out += '}';
            return;
        case Kind::Star: {
            const Expr& k = e->kids.front();
            if (k->kind == Kind::Concat) {
                out += '(';
                print(k, names, multi_glyph, out);
                out += ')';
            } else {
                print(k, names, multi_glyph, out);
            }
            out += "⋆";
            return;
        }
    }
}

}  // namespace

std::string to_string(const Expr& e, const std::vector<std::string>& names) {
    // Reuse the word printer's rule for deciding between juxtaposition and dots.
    bool multi = false;
    if (names.size() >= 2) multi = format_word(names, Word{0, 1}).find('.') != std::string::npos;
    std::string out;
    print(e, names, multi, out);
    return out;
}

Expr zimin_rewrite(const Expr& e) {
    switch (e->kind) {
        case Kind::Epsilon:
        case Kind::Letter: return e;
        case Kind::Concat: {
            std::vector<Expr> parts;
            for (const Expr& k : e->kids) parts.push_back(zimin_rewrite(k));
            return kleene::concat(parts);
        }
        case Kind::Union: {
            std::vector<Expr> parts;
            for (const Expr& k : e->kids) parts.push_back(zimin_rewrite(k));
            return kleene::unite(parts);
        }
        case Kind::Star: {
            Expr inner = zimin_rewrite(e->kids.front());
            if (inner->kind != Kind::Union) return kleene::star(inner);
            std::vector<Expr> terms = inner->kids;
            Expr head = kleene::star(terms.front());
            for (std::size_t i = 1; i < terms.size(); ++i)
                head = kleene::concat(head, kleene::star(kleene::concat(terms[i], head)));
            return head;
        }
    }
    return e;
}

bool has_star_of_union(const Expr& e) {
    if (e->kind == Kind::Star && e->kids.front()->kind == Kind::Union) return true;
    return std::any_of(e->kids.begin(), e->kids.end(), has_star_of_union);
}

std::size_t expr_size(const Expr& e) {
    std::size_t n = 1;
    for (const Expr& k : e->kids) n += expr_size(k);
    return n;
}

namespace {

template <class W>
W eval(const Expr& e, const std::vector<W>& x, W (*star_of)(const W&)) {
    switch (e->kind) {
        case Kind::Epsilon: return W(1);
        case Kind::Letter: return x[static_cast<std::size_t>(e->letter)];
        case Kind::Concat: {
            W acc(1);
            for (const Expr& k : e->kids) acc = acc * eval(k, x, star_of);
            return acc;
        }
        case Kind::Union: {
            W acc(0);
            for (const Expr& k : e->kids) acc = acc + eval(k, x, star_of);
            return acc;
        }
        case Kind::Star: return star_of(eval(e->kids.front(), x, star_of));
    }
    return W(0);
}

Rational rational_star(const Rational& f) {
    if (f >= 1) throw Error(ErrorCode::DivergentStar, "star argument evaluates to " + to_string(f));
    return Rational(1) / (Rational(1) - f);
}

RationalFunction function_star(const RationalFunction& f) {
    RationalFunction d = RationalFunction(Rational(1)) - f;
    if (d.is_zero()) throw Error(ErrorCode::DivergentStar, "star argument is identically 1");
    return RationalFunction(Rational(1)) / d;
}

}  // namespace

Rational evaluate(const Expr& e, const std::vector<Rational>& x) { return eval<Rational>(e, x, rational_star); }

RationalFunction evaluate(const Expr& e, const std::vector<RationalFunction>& x) {
    return eval<RationalFunction>(e, x, function_star);
}

}  // namespace semiwalk
