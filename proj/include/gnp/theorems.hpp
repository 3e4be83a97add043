#pragma once

#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "gnp/narayana.hpp"
#include "gnp/poly.hpp"
#include "gnp/rational.hpp"
#include "gnp/roots.hpp"

namespace gnp {

/// Raised when exact computation contradicts a proved statement about the
/// family (e.g. a positive-root count other than one). For correct inputs this
/// is unreachable; reaching it is a mathematical finding and is reported, not
/// masked.
struct theorem_violation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Verdict { pass, fail, undecided };
std::string to_string(Verdict v);

/// Outcome of one check together with an exact, human-readable witness
/// (evaluated rationals, certified intervals).
struct CheckResult {
    Verdict verdict = Verdict::undecided;
    std::string witness;
};

/// Two-sided bracket for the positive zero of N_{n,m}, n >= m+3:
///   lower = 2(n+1) / ((m+1-n)((m+2)^2 - (n+1)^2 - 1))
///   upper = 2 / ((m-n)(m+1-n))
/// Construction verifies 0 < lower < upper <= 1/3 and positive denominators.
struct BoundPair {
    Rational lower;
    Rational upper;
    FamilyIndex idx;
};

BoundPair positive_zero_bounds(const FamilyIndex& idx);

/// Certified enclosure of the unique positive zero of N_{n,m}, n >= m+2.
/// Verifies the positive-root count is exactly one before isolating. The
/// n == m+2 zero is exactly 1; the m == 0 zero is exactly 2/(n(n-1)); both are
/// returned in the exact field. For n >= m+3 the initial bracket comes from
/// positive_zero_bounds with endpoint signs checked first.
RootInterval certified_positive_zero(const FamilyIndex& idx, unsigned bits = 64);

/// Exactly m pairwise disjoint certified intervals, all strictly negative,
/// found by Sturm-guided bisection of (-L, 0) with L the Cauchy root bound.
/// A count other than m throws theorem_violation.
std::vector<RootInterval> negative_zero_set(const FamilyIndex& idx, unsigned bits = 64);

/// Checks N(lower) > 0 and, exactly, N(upper) < 0 for m >= 1 / N(upper) == 0
/// for m == 0. Requires n >= m+3. The witness records both evaluations.
CheckResult verify_bounds(const FamilyIndex& idx);

/// Classifies each positive sample against the certified positive zero:
/// sign(N(x)) must be +1 below the enclosure, -1 above it, 0 only at an exact
/// root; samples inside the enclosure trigger refinement until classified.
CheckResult verify_sign_lemma(const FamilyIndex& idx, std::span<const Rational> samples,
                              unsigned bits = 64);

/// Deterministic sample set exercising both sides of the zero and the
/// refinement path through the enclosure itself.
std::vector<Rational> default_sign_samples(const RootInterval& zero);

/// The three zero-monotonicity inequalities at (n, m), n >= m+3:
///   (i)  r(n+1, m)   < r(n, m)
///   (ii) r(n+1, m+1) < r(n, m)
///   (iii) r(n, m)    < r(n, m+1)   [only defined for n >= m+4]
/// Each is decided by refining the two enclosures to disjointness; a pass
/// witness embeds both disjoint intervals.
struct MonotonicityResult {
    CheckResult decrease_in_n;    // (i)
    CheckResult diagonal;         // (ii)
    CheckResult increase_in_m;    // (iii)
    bool increase_applicable = false;

    Verdict overall() const;
    std::string witness() const;
};

MonotonicityResult verify_monotonicity(long m, long n, unsigned bits = 64);

/// Strict interlacing of the negative zeros: with u_1 < ... < u_{m+1} those of
/// N_{n+1,m+1} and v_1 < ... < v_m those of N_{n,m}, verifies
/// u_1 < v_1 < u_2 < ... < v_m < u_{m+1}. Ties and unseparated pairs yield
/// "undecided", never a pass. Requires n >= m+2.
CheckResult verify_interlacing(const FamilyIndex& idx, unsigned bits = 64);

/// Root census for n >= m+2: squarefree, degree m+1, exactly one positive and
/// m negative real roots, counted by Sturm sequences and cross-checked against
/// the isolated negative set.
CheckResult verify_census(const FamilyIndex& idx, unsigned bits = 64);

/// For every m+3 <= n <= n_max: the certified positive zero lies in (0, 1/3],
/// with 1/3 attained only at (n,m) = (3,0); the upper bounds strictly decrease
/// in n; and, when epsilon is given, upper(n_max) < epsilon (the certified
/// proxy for the zero tending to 0).
CheckResult verify_proposition(long m, long n_max, unsigned bits = 64,
                               const std::optional<Rational>& epsilon = std::nullopt);

/// Per-(n,m) record: bracket, certified positive zero, negative zeros, and a
/// pass/fail map over the fixed check registry {squarefree,
/// unique_positive_zero, negative_zero_count, zero_in_bracket, bounds_signs};
/// bounds_signs is present only for n >= m+3.
struct ZeroReport {
    FamilyIndex idx;
    BoundPair bracket;
    RootInterval positive_zero;
    std::vector<RootInterval> negative_zeros;
    std::map<std::string, bool> checks;

    bool all_pass() const;
};

ZeroReport build_zero_report(const FamilyIndex& idx, unsigned bits = 64);

}  // namespace gnp
