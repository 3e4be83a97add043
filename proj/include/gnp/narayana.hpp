#pragma once

#include <string>

#include "gnp/poly.hpp"
#include "gnp/rational.hpp"

namespace gnp {

/// Validated (n, m) pair selecting one member N_{n,m} of the generalized
/// Narayana family. Both indices are nonnegative.
struct FamilyIndex {
    long n;
    long m;

    FamilyIndex(long n_, long m_);
    std::string str() const;  // "(n,m)"
    bool operator==(const FamilyIndex&) const = default;
};

/// Structural regime of an index: the family degenerates differently at the
/// classical diagonal n = m+1 and the vanishing diagonal n = m+2.
enum class Regime {
    wide,            // n <= m
    classical,       // n == m+1: reduces to the classical Narayana polynomial
    chu_vandermonde, // n == m+2: N(1) == 0
    bounded_zero,    // n >= m+3: positive zero obeys the two-sided bound
};

Regime regime(const FamilyIndex& idx);

/// Coefficient of x^k in N_{n,m}: C(n,k)C(m,k) - C(n,k+1)C(m,k-1).
/// Always integer-valued.
Rational gn_coefficient(const FamilyIndex& idx, long k);

/// The generalized Narayana polynomial N_{n,m}(x), normalized. Degree is m+1
/// for n >= m+2 and m for n == m+1 (both verified on construction).
Poly gn_poly(const FamilyIndex& idx);

/// Classical Narayana number (1/n) C(n,k) C(n,k+1); zero outside 0 <= k <= n-1.
/// Throws std::invalid_argument for n < 1.
Rational narayana_number(long n, long k);

/// Catalan number C(2n,n)/(n+1).
Rational catalan(long n);

/// Closed form for N_{n-1,m} - N_{n,m} when n >= m+2: the coefficient of x^k
/// is C(n,k) C(m,k-1) (n-m-1)/n. All coefficients are nonnegative, so the
/// family strictly decreases in n on x > 0. Throws for n < m+2.
Poly diff_poly(const FamilyIndex& idx);

/// The three-term recurrence c * N_{n,m+1} = a * N_{n,m} + b * N_{n-1,m}:
///   a = (m+2-n)(m^2-n^2+4m+3) x - 2n
///   b = n [(m+2-n)(m+1-n) x - 2](x - 1)
///   c = (m+3)(m+2-n)(m+1-n) x
/// The auxiliary constants A, B, C, D from the coefficient-comparison proof
/// are carried along and cross-checked on construction (C = B + 2n, A = C + D).
struct RecurrenceCoeffs {
    Poly a;  // degree <= 1
    Poly b;  // degree <= 2
    Poly c;  // gamma * x; the zero polynomial when n is m+1 or m+2
    Rational aux_A;
    Rational aux_B;
    Rational aux_C;
    Rational aux_D;
};

/// Throws std::invalid_argument for n < 1 (the recurrence needs n >= 1).
RecurrenceCoeffs recurrence_coeffs(const FamilyIndex& idx);

/// True iff c * N_{n,m+1} - a * N_{n,m} - b * N_{n-1,m} is exactly the zero
/// polynomial. Requires n >= 1.
bool verify_recurrence(const FamilyIndex& idx);

/// Builds N_{n,m+1} as (a * N_{n,m} + b * N_{n-1,m}) / c by exact division.
/// Requires n >= 1 and n not in {m+1, m+2}, where c vanishes identically.
/// A nonzero division remainder would falsify the recurrence and throws
/// std::logic_error rather than being masked.
Poly apply_recurrence(const FamilyIndex& idx);

/// True iff N_{m+2,m}(1) == 0 (the Chu-Vandermonde vanishing).
bool chu_vandermonde_check(long m);

}  // namespace gnp
