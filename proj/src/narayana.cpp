#include "gnp/narayana.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace gnp {

FamilyIndex::FamilyIndex(long n_, long m_) : n(n_), m(m_) {
    if (n < 0 || m < 0) throw std::invalid_argument("FamilyIndex: n and m must be nonnegative");
}

std::string FamilyIndex::str() const {
    return "(" + std::to_string(n) + "," + std::to_string(m) + ")";
}

Regime regime(const FamilyIndex& idx) {
    if (idx.n <= idx.m) return Regime::wide;
    if (idx.n == idx.m + 1) return Regime::classical;
    if (idx.n == idx.m + 2) return Regime::chu_vandermonde;
    return Regime::bounded_zero;
}

Rational gn_coefficient(const FamilyIndex& idx, long k) {
    if (k < 0) throw std::invalid_argument("gn_coefficient: negative k");
    return Rational(binomial(idx.n, k) * binomial(idx.m, k) -
                    binomial(idx.n, k + 1) * binomial(idx.m, k - 1));
}

Poly gn_poly(const FamilyIndex& idx) {
    // the printed summation bound n exceeds the true degree; normalization
    // strips the zero tail and the degree law is then asserted, not assumed
    std::vector<Rational> coeffs(static_cast<std::size_t>(idx.n) + 1);
    for (long k = 0; k <= idx.n; ++k)
        coeffs[static_cast<std::size_t>(k)] = gn_coefficient(idx, k);
    Poly p(std::move(coeffs));

    const auto deg = p.degree();
    if (idx.n >= idx.m + 2 && (!deg || *deg != static_cast<std::size_t>(idx.m) + 1))
        throw std::logic_error("gn_poly: degree law violated for n >= m+2");
    if (idx.n == idx.m + 1 && (!deg || *deg != static_cast<std::size_t>(idx.m)))
        throw std::logic_error("gn_poly: degree law violated for n == m+1");
    return p;
}

Rational narayana_number(long n, long k) {
    if (n < 1) throw std::invalid_argument("narayana_number: requires n >= 1");
    if (k < 0 || k > n - 1) return Rational(0);
    return Rational(binomial(n, k) * binomial(n, k + 1), Int(n));
}

Rational catalan(long n) {
    if (n < 0) throw std::invalid_argument("catalan: negative n");
    return Rational(binomial(2 * n, n), Int(n + 1));
}

Poly diff_poly(const FamilyIndex& idx) {
    if (idx.n < idx.m + 2)
        throw std::invalid_argument("diff_poly: closed form asserted only for n >= m+2");
    std::vector<Rational> coeffs(static_cast<std::size_t>(idx.m) + 2);
    for (long k = 0; k <= idx.m + 1; ++k)
        coeffs[static_cast<std::size_t>(k)] =
            Rational(binomial(idx.n, k) * binomial(idx.m, k - 1) * Int(idx.n - idx.m - 1),
                     Int(idx.n));
    return Poly(std::move(coeffs));
}

RecurrenceCoeffs recurrence_coeffs(const FamilyIndex& idx) {
    const long n = idx.n;
    const long m = idx.m;
    if (n < 1) throw std::invalid_argument("recurrence_coeffs: requires n >= 1");

    const Int A = Int(m + 2 - n) * (Int(m) * m - Int(n) * n + 4 * m + 3);
    const Int B = Int(n) * (m + 2 - n) * (m + 1 - n);
    const Int C = B + 2 * n;
    const Int D = Int(m + 1 - n) * (Int(m) * m - Int(m) * n + 5 * m - n + 6);

    RecurrenceCoeffs rc;
    rc.a = Poly{Rational(Int(-2 * n)), Rational(A)};
    rc.b = Poly{Rational(Int(2 * n)), Rational(-C), Rational(B)};
    rc.c = Poly{Rational(0), Rational(Int(m + 3) * (m + 2 - n) * (m + 1 - n))};
    rc.aux_A = Rational(A);
    rc.aux_B = Rational(B);
    rc.aux_C = Rational(C);
    rc.aux_D = Rational(D);

    // transcription guards for the proof constants
    if (rc.aux_C != rc.aux_B + Rational(2 * n) || rc.aux_A != rc.aux_C + rc.aux_D)
        throw std::logic_error("recurrence_coeffs: auxiliary constant identities violated");
    return rc;
}

bool verify_recurrence(const FamilyIndex& idx) {
    const RecurrenceCoeffs rc = recurrence_coeffs(idx);
    const Poly lhs = rc.c * gn_poly({idx.n, idx.m + 1});
    const Poly rhs = rc.a * gn_poly(idx) + rc.b * gn_poly({idx.n - 1, idx.m});
    return (lhs - rhs).is_zero();
}

Poly apply_recurrence(const FamilyIndex& idx) {
    const long n = idx.n;
    const long m = idx.m;
    if (n < 1) throw std::invalid_argument("apply_recurrence: requires n >= 1");
    if (n == m + 1 || n == m + 2)
        throw std::invalid_argument("apply_recurrence: c vanishes identically for n in {m+1, m+2}");

    const RecurrenceCoeffs rc = recurrence_coeffs(idx);
    const Poly num = rc.a * gn_poly(idx) + rc.b * gn_poly({n - 1, m});
    const Rational gamma = rc.c.coeff(1);

    if (!num.coeff(0).is_zero())
        throw std::logic_error("apply_recurrence: numerator not divisible by x");
    if (num.is_zero()) return {};
    std::vector<Rational> out(*num.degree());
    for (std::size_t k = 1; k <= *num.degree(); ++k) out[k - 1] = num.coeff(k) / gamma;
    return Poly(std::move(out));
}

bool chu_vandermonde_check(long m) {
    if (m < 0) throw std::invalid_argument("chu_vandermonde_check: negative m");
    return gn_poly({m + 2, m}).eval(Rational(1)).is_zero();
}

}  // namespace gnp
