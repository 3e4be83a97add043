#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gnp/rational.hpp"

namespace gnp {

/// Dense univariate polynomial with exact rational coefficients, stored in
/// ascending powers: coeffs()[k] is the coefficient of x^k.
///
/// Invariant: the stored sequence never ends in a zero coefficient; the zero
/// polynomial is the empty sequence and its degree() is nullopt.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rational> coeffs);
    Poly(std::initializer_list<Rational> coeffs);

    static Poly monomial(const Rational& c, std::size_t k);

    bool is_zero() const { return c_.empty(); }
    std::optional<std::size_t> degree() const;
    const std::vector<Rational>& coeffs() const { return c_; }

    /// Coefficient of x^k; zero beyond the degree.
    const Rational& coeff(std::size_t k) const;
    /// Leading coefficient. Throws std::invalid_argument on the zero polynomial.
    const Rational& leading() const;

    /// Exact evaluation by Horner's scheme.
    Rational eval(const Rational& x) const;

    Poly derivative() const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Rational& s, const Poly& p);
    friend Poly operator*(const Poly& p, const Rational& s) { return s * p; }

    bool operator==(const Poly& o) const { return c_ == o.c_; }

    /// Human-readable ascending form, e.g. "1 - 5*x - 10*x^2". Zero terms are
    /// skipped; the zero polynomial prints as "0".
    std::string str(std::string_view var = "x") const;

private:
    void normalize();
    std::vector<Rational> c_;
};

struct PolyDivMod {
    Poly quot;
    Poly rem;
};

/// Exact euclidean division: a == quot * b + rem with deg(rem) < deg(b).
/// Throws std::invalid_argument when b is the zero polynomial.
PolyDivMod divmod(const Poly& a, const Poly& b);

/// Monic gcd by the euclidean algorithm; poly_gcd(p, 0) is p made monic.
Poly poly_gcd(Poly a, Poly b);

}  // namespace gnp
