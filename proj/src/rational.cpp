#include "semiwalk/rational.hpp"

#include "semiwalk/error.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace semiwalk {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::Parse: return "ParseError";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::NotAssociative: return "NotAssociative";
        case ErrorCode::GeneratorsDoNotGenerate: return "GeneratorsDoNotGenerate";
        case ErrorCode::ClosureTooLarge: return "ClosureTooLarge";
        case ErrorCode::SizeCap: return "SizeCap";
        case ErrorCode::NotACodeWord: return "NotACodeWord";
        case ErrorCode::DivergentStar: return "DivergentStar";
        case ErrorCode::DivergentLimit: return "DivergentLimit";
        case ErrorCode::NotConverged: return "NotConverged";
        case ErrorCode::InvalidProbabilities: return "InvalidProbabilities";
        case ErrorCode::Unavailable: return "Unavailable";
    }
    return "Error";
}

namespace {

bool all_digits(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

Rational parse_integer_part(std::string_view s, std::string_view whole) {
    bool neg = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        neg = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s)) throw Error(ErrorCode::Parse, "not a number: '" + std::string(whole) + "'");
    mpz_class z(std::string(s), 10);
    if (neg) z = -z;
    return Rational(z);
}

Rational parse_decimal(std::string_view s, std::string_view whole) {
    auto dot = s.find('.');
    if (dot == std::string_view::npos) return parse_integer_part(s, whole);
    std::string_view ip = s.substr(0, dot);
    std::string_view fp = s.substr(dot + 1);
    bool neg = !ip.empty() && ip.front() == '-';
    if (!ip.empty() && (ip.front() == '-' || ip.front() == '+')) ip.remove_prefix(1);
    if ((ip.empty() && fp.empty()) || (!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)))
        throw Error(ErrorCode::Parse, "not a number: '" + std::string(whole) + "'");
    std::string digits = std::string(ip) + std::string(fp);
    if (digits.empty()) digits = "0";
    mpz_class num(digits, 10);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, fp.size());
    Rational r(num, den);
    r.canonicalize();
    return neg ? Rational(-r) : r;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    if (s.empty()) throw Error(ErrorCode::Parse, "empty number");
    auto slash = s.find('/');
    if (slash == std::string_view::npos) return parse_decimal(s, text);
    Rational num = parse_decimal(s.substr(0, slash), text);
    Rational den = parse_decimal(s.substr(slash + 1), text);
    if (den == 0) throw Error(ErrorCode::Parse, "zero denominator in '" + std::string(text) + "'");
    Rational r = num / den;
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r) {
    Rational c = r;
    c.canonicalize();
    if (c.get_den() == 1) return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

double to_double(const Rational& r) { return r.get_d(); }

// ---------------------------------------------------------------- Polynomial

Polynomial::Polynomial(Rational constant) {
    if (constant != 0) coeffs_.push_back(std::move(constant));
}

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::t() { return Polynomial(std::vector<Rational>{Rational(0), Rational(1)}); }

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Polynomial::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Rational(0);
    return coeffs_[static_cast<std::size_t>(i)];
}

Rational Polynomial::leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

int Polynomial::low_order() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return static_cast<int>(i);
    return -1;
}

Rational Polynomial::evaluate(const Rational& at) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
    return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
    if (is_zero() || o.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    coeffs_ = std::move(out);
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& x : coeffs_) x *= c;
    return *this;
}

void Polynomial::divmod(const Polynomial& num, const Polynomial& den, Polynomial& quot, Polynomial& rem) {
    if (den.is_zero()) throw Error(ErrorCode::InvalidArgument, "polynomial division by zero");
    rem = num;
    quot = Polynomial();
    if (rem.degree() < den.degree()) return;
    std::vector<Rational> q(static_cast<std::size_t>(rem.degree() - den.degree() + 1), Rational(0));
    const Rational lead = den.leading();
    while (!rem.is_zero() && rem.degree() >= den.degree()) {
        int shift = rem.degree() - den.degree();
        Rational factor = rem.leading() / lead;
        q[static_cast<std::size_t>(shift)] = factor;
        for (int i = 0; i <= den.degree(); ++i)
            rem.coeffs_[static_cast<std::size_t>(i + shift)] -= factor * den.coeffs_[static_cast<std::size_t>(i)];
        rem.trim();
    }
    quot = Polynomial(std::move(q));
}

Polynomial Polynomial::gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        Polynomial q, r;
        divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero()) a *= Rational(1) / a.leading();
    return a;
}

Polynomial Polynomial::shifted_down(int k) const {
    if (k <= 0) return *this;
    if (k >= static_cast<int>(coeffs_.size())) return Polynomial();
    return Polynomial(std::vector<Rational>(coeffs_.begin() + k, coeffs_.end()));
}

std::string Polynomial::to_string(std::string_view var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Rational& c = coeffs_[i];
        if (c == 0) continue;
        Rational mag = c < 0 ? Rational(-c) : c;
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        if (i == 0 || mag != 1) os << semiwalk::to_string(mag);
        if (i >= 1) os << var;
        if (i >= 2) os << "^" << i;
        first = false;
    }
    return os.str();
}

// ---------------------------------------------------------- RationalFunction

RationalFunction::RationalFunction() : num_(), den_(Rational(1)) {}

RationalFunction::RationalFunction(Rational c) : num_(std::move(c)), den_(Rational(1)) {}

RationalFunction::RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw Error(ErrorCode::InvalidArgument, "rational function with zero denominator");
    normalize();
}

RationalFunction RationalFunction::t() { return RationalFunction(Polynomial::t()); }

void RationalFunction::normalize() {
    if (num_.is_zero()) {
        den_ = Polynomial(Rational(1));
        return;
    }
    Polynomial g = Polynomial::gcd(num_, den_);
    if (g.degree() > 0) {
        Polynomial q, r;
        Polynomial::divmod(num_, g, q, r);
        num_ = std::move(q);
        Polynomial::divmod(den_, g, q, r);
        den_ = std::move(q);
    }
    Rational lead = den_.leading();
    if (lead != 1) {
        Rational inv = Rational(1) / lead;
        num_ *= inv;
        den_ *= inv;
    }
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (den_ == o.den_) {
        num_ += o.num_;
    } else {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ *= o.den_;
    }
    normalize();
    return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) {
    RationalFunction neg = o;
    neg.num_ *= Rational(-1);
    return *this += neg;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
    if (o.is_zero()) throw Error(ErrorCode::InvalidArgument, "rational function division by zero");
    num_ *= o.den_;
    den_ *= o.num_;
    normalize();
    return *this;
}

Rational RationalFunction::limit_at_zero() const {
    if (num_.is_zero()) return Rational(0);
    int ln = num_.low_order();
    int ld = den_.low_order();
    if (ln > ld) return Rational(0);
    if (ln < ld) throw Error(ErrorCode::DivergentLimit, "pole at t = 0: " + to_string());
    return num_.coeff(ln) / den_.coeff(ld);
}

Rational RationalFunction::evaluate(const Rational& at) const {
    Rational d = den_.evaluate(at);
    if (d == 0) throw Error(ErrorCode::DivergentLimit, "denominator vanishes at evaluation point");
    return num_.evaluate(at) / d;
}

std::string RationalFunction::to_string() const {
    if (den_.degree() == 0) return "(" + num_.to_string() + ")";
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace semiwalk
