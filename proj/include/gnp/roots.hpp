#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gnp/poly.hpp"
#include "gnp/rational.hpp"

namespace gnp {

/// A polynomial with a repeated root reached a code path that assumes simple
/// zeros. This is surfaced as its own error type because for the polynomial
/// families under study it would be a mathematical finding, not a bug.
struct non_squarefree_error : std::domain_error {
    using std::domain_error::domain_error;
};

/// Certified enclosure of one real root with rational endpoints.
///
/// Either `exact` is set (then lo == hi == *exact and the polynomial vanishes
/// there), or the target polynomial has strictly opposite nonzero signs at lo
/// and hi and exactly one root in the open interval (lo, hi).
struct RootInterval {
    Rational lo;
    Rational hi;
    std::optional<Rational> exact;

    bool is_exact() const { return exact.has_value(); }
    Rational width() const { return hi - lo; }
    Rational midpoint() const { return (lo + hi).div_pow2(1); }
    std::string str() const;
};

/// Signed remainder chain p, p', -rem(p, p'), ... ending at the last nonzero
/// element (a constant for squarefree p, otherwise a nonconstant gcd).
class SturmChain {
public:
    /// Throws std::invalid_argument on the zero polynomial.
    explicit SturmChain(Poly p);

    const std::vector<Poly>& chain() const { return chain_; }
    const Poly& poly() const { return chain_.front(); }

    /// True when the terminal element is a nonzero constant, i.e. gcd(p, p')
    /// is constant and all real roots are simple.
    bool squarefree() const;

    /// Sign variations of the chain at x, zeros skipped.
    int variations_at(const Rational& x) const;
    int variations_neg_inf() const;
    int variations_pos_inf() const;

    /// Number of distinct real roots in (lo, hi]; a missing endpoint means the
    /// corresponding infinity. Valid for root endpoints as well when the chain
    /// is squarefree (variations are counted with zeros skipped).
    int count(const std::optional<Rational>& lo, const std::optional<Rational>& hi) const;

private:
    std::vector<Poly> chain_;
};

/// Number of distinct real roots of p in (lo, hi]; nullopt endpoints are
/// -infinity / +infinity. Requires a squarefree p (non_squarefree_error
/// otherwise) and non-root finite endpoints (std::invalid_argument).
int count_real_roots(const Poly& p, const std::optional<Rational>& lo,
                     const std::optional<Rational>& hi);

/// Sign variations in the nonzero coefficient sequence: an upper bound on the
/// number of positive real roots. Throws on the zero polynomial.
int descartes_positive_count(const Poly& p);

bool is_squarefree(const Poly& p);

/// Strict bound B = 1 + max_k |c_k / c_d| for k < d: every real root lies in
/// (-B, B). Throws on the zero polynomial.
Rational cauchy_root_bound(const Poly& p);

/// Isolates the unique root of p in [lo, hi] down to width <= (hi-lo) * 2^-bits
/// by exact bisection. Endpoint or midpoint roots, and degree-1 polynomials,
/// short-circuit to an exact result. Throws std::invalid_argument on same-sign
/// endpoints or when more than one root is detected in the bracket.
RootInterval isolate_unique_root(const Poly& p, const Rational& lo, const Rational& hi,
                                 unsigned bits = 64);

/// All roots of squarefree p in the open interval (lo, hi), ascending, as
/// pairwise disjoint certified intervals; each is refined by `bits` relative
/// to the subdivision cell that isolated it. Requires p(lo) != 0, p(hi) != 0.
std::vector<RootInterval> isolate_roots_in(const Poly& p, const Rational& lo,
                                           const Rational& hi, unsigned bits = 64);

/// A certified root that can be narrowed on demand.
class RootRefiner {
public:
    RootRefiner(Poly p, RootInterval iv);

    const RootInterval& interval() const { return iv_; }
    bool exact() const { return iv_.is_exact(); }

    /// One exact bisection step; no-op once exact.
    void refine();

private:
    Poly p_;
    RootInterval iv_;
    int lo_sign_ = 0;
};

enum class Order {
    less,
    greater,
    equal,        // both exact and identical
    unseparated,  // round cap hit before the intervals became disjoint
};

/// Strictly orders two certified roots, refining both until their intervals
/// are disjoint. Never concludes from overlapping intervals.
Order separate(RootRefiner& a, RootRefiner& b, int max_rounds = 4096);

/// Interval-separation loops stop after this many bisection rounds and report
/// an undecided outcome; the theorems under test guarantee termination, so the
/// cap only bounds runtime in the presence of bugs.
inline constexpr int kRefineCap = 4096;

}  // namespace gnp
