#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace gnp {

/// Arbitrary-precision integer.
using Int = mpz_class;

/// Exact arbitrary-precision rational number.
///
/// Invariants: denominator > 0, gcd(|numerator|, denominator) == 1, zero is
/// stored as 0/1. Every constructor canonicalizes; every arithmetic operation
/// preserves canonical form. There is no floating point on any code path.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long v) : q_(v) {}  // NOLINT: implicit by design, enables literals
    Rational(const Int& v) : q_(v) {}
    Rational(const Int& num, const Int& den);
    Rational(long num, long den);

    /// Parses "n" or "n/d" with optional leading minus. Rejects d == 0.
    static std::optional<Rational> parse(std::string_view s);

    Int num() const { return q_.get_num(); }
    Int den() const { return q_.get_den(); }

    int sign() const { return sgn(q_); }
    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }

    Rational abs() const;
    Rational reciprocal() const;

    /// Exact division by 2^bits.
    Rational div_pow2(unsigned long bits) const;

    /// Nearest double, for display only; never feeds back into arithmetic.
    double approx() const { return q_.get_d(); }

    /// "num/den", or just "num" for integers.
    std::string str() const { return q_.get_str(); }

    Rational operator-() const;
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return mpq_equal(a.q_.get_mpq_t(), b.q_.get_mpq_t()) != 0;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

private:
    mpq_class q_;  // canonical at all times
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Binomial coefficient C(n, k). Returns 0 for k < 0 or k > n.
/// Throws std::invalid_argument for n < 0.
Int binomial(long n, long k);

}  // namespace gnp
