#pragma once

// Exact rationals (GMP) and univariate rational functions over Q.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace semiwalk {

using Rational = mpq_class;

/// Parses "p/q", an integer, or a finite decimal ("0.25") into an exact rational.
/// Throws semiwalk::Error(ErrorCode::Parse) on malformed input.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" (or "p" when q == 1).
std::string to_string(const Rational& r);

double to_double(const Rational& r);

/// Dense polynomial in one variable t with rational coefficients.
/// coeffs[i] is the coefficient of t^i; no trailing zeros (zero polynomial is empty).
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(Rational constant);
    explicit Polynomial(std::vector<Rational> coeffs);

    static Polynomial t();

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    Rational coeff(int i) const;
    Rational leading() const;
    /// Multiplicity of the root t = 0.
    int low_order() const;
    Rational evaluate(const Rational& at) const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);
    Polynomial& operator*=(const Rational& c);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

    /// Euclidean division; divisor must be nonzero.
    static void divmod(const Polynomial& num, const Polynomial& den, Polynomial& quot, Polynomial& rem);
    /// Monic gcd (zero iff both inputs are zero).
    static Polynomial gcd(Polynomial a, Polynomial b);

    Polynomial shifted_down(int k) const;
    std::string to_string(std::string_view var = "t") const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

/// Element of Q(t), kept reduced: gcd(num, den) = 1 and den monic.
class RationalFunction {
public:
    RationalFunction();  // zero
    RationalFunction(Rational c);
    RationalFunction(Polynomial num, Polynomial den = Polynomial(Rational(1)));

    static RationalFunction t();

    const Polynomial& numerator() const { return num_; }
    const Polynomial& denominator() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RationalFunction& operator+=(const RationalFunction& o);
    RationalFunction& operator-=(const RationalFunction& o);
    RationalFunction& operator*=(const RationalFunction& o);
    RationalFunction& operator/=(const RationalFunction& o);

    friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
    friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
    friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
    friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    /// lim_{t -> 0}. Cancels common powers of t first; throws Error(ErrorCode::DivergentLimit)
    /// when the denominator vanishes to higher order than the numerator.
    Rational limit_at_zero() const;
    Rational evaluate(const Rational& at) const;
    std::string to_string() const;

private:
    void normalize();
    Polynomial num_;
    Polynomial den_;
};

}  // namespace semiwalk
