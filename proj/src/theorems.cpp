#include "gnp/theorems.hpp"

#include <sstream>
#include <utility>

namespace gnp {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::pass: return "pass";
        case Verdict::fail: return "fail";
        case Verdict::undecided: return "undecided";
    }
    return "undecided";
}

BoundPair positive_zero_bounds(const FamilyIndex& idx) {
    const long n = idx.n;
    const long m = idx.m;
    if (n < m + 3) throw std::invalid_argument("positive_zero_bounds: requires n >= m+3");

    const Int lower_den = Int(m + 1 - n) * (Int(m + 2) * (m + 2) - Int(n + 1) * (n + 1) - 1);
    const Int upper_den = Int(m - n) * (m + 1 - n);
    if (lower_den <= 0 || upper_den <= 0)
        throw std::logic_error("positive_zero_bounds: nonpositive denominator");

    const Rational lower(Int(2 * (n + 1)), lower_den);
    const Rational upper(Int(2), upper_den);
    if (!(Rational(0) < lower && lower < upper && upper <= Rational(1, 3)))
        throw std::logic_error("positive_zero_bounds: bracket invariant violated");
    return {lower, upper, idx};
}

RootInterval certified_positive_zero(const FamilyIndex& idx, unsigned bits) {
    const long n = idx.n;
    const long m = idx.m;
    if (n < m + 2) throw std::invalid_argument("certified_positive_zero: requires n >= m+2");

    const Poly p = gn_poly(idx);
    const int positive = count_real_roots(p, Rational(0), std::nullopt);
    if (positive != 1)
        throw theorem_violation("positive root count is " + std::to_string(positive) + " for N" +
                                idx.str());

    if (n == m + 2) {
        const Rational one(1);
        if (!p.eval(one).is_zero()) throw theorem_violation("N" + idx.str() + "(1) != 0");
        return {one, one, one};
    }

    const BoundPair bp = positive_zero_bounds(idx);
    const Rational at_lower = p.eval(bp.lower);
    const Rational at_upper = p.eval(bp.upper);
    if (at_upper.is_zero()) return {bp.upper, bp.upper, bp.upper};
    if (at_lower.sign() <= 0)
        throw theorem_violation("N" + idx.str() + " is not positive at its lower bound");
    if (at_upper.sign() > 0)
        throw theorem_violation("N" + idx.str() + " is not negative at its upper bound");
    return isolate_unique_root(p, bp.lower, bp.upper, bits);
}

std::vector<RootInterval> negative_zero_set(const FamilyIndex& idx, unsigned bits) {
    if (idx.n < idx.m + 2) throw std::invalid_argument("negative_zero_set: requires n >= m+2");
    const Poly p = gn_poly(idx);
    auto roots = isolate_roots_in(p, -cauchy_root_bound(p), Rational(0), bits);
    if (static_cast<long>(roots.size()) != idx.m)
        throw theorem_violation("negative zero count is " + std::to_string(roots.size()) +
                                " for N" + idx.str() + ", expected " + std::to_string(idx.m));
    return roots;
}

CheckResult verify_bounds(const FamilyIndex& idx) {
    const BoundPair bp = positive_zero_bounds(idx);
    const Poly p = gn_poly(idx);
    const Rational at_lower = p.eval(bp.lower);
    const Rational at_upper = p.eval(bp.upper);

    std::ostringstream w;
    w << "N(lower)=" << at_lower.str() << ";N(upper)=" << at_upper.str();
    const bool upper_ok = idx.m == 0 ? at_upper.is_zero() : at_upper.sign() < 0;
    const bool ok = at_lower.sign() > 0 && upper_ok;
    return {ok ? Verdict::pass : Verdict::fail, w.str()};
}

CheckResult verify_sign_lemma(const FamilyIndex& idx, std::span<const Rational> samples,
                              unsigned bits) {
    if (idx.n < idx.m + 2) throw std::invalid_argument("verify_sign_lemma: requires n >= m+2");
    for (const Rational& x : samples)
        if (x.sign() <= 0) throw std::invalid_argument("verify_sign_lemma: samples must be positive");

    const Poly p = gn_poly(idx);
    RootRefiner zero(p, certified_positive_zero(idx, bits));

    std::ostringstream w;
    bool first = true;
    for (const Rational& x : samples) {
        const int s = p.eval(x).sign();
        if (!first) w << ";";
        first = false;
        if (s == 0) {
            // positive with N(x) == 0: x is the unique positive zero itself
            w << x.str() << ":0";
            continue;
        }
        int rounds = 0;
        while (zero.interval().lo < x && x < zero.interval().hi) {
            if (rounds++ >= kRefineCap)
                return {Verdict::undecided, "sample " + x.str() + " unclassified after " +
                                                std::to_string(kRefineCap) + " rounds"};
            zero.refine();
        }
        const int expected = x <= zero.interval().lo ? 1 : -1;
        if (s != expected)
            return {Verdict::fail, "sample " + x.str() + " has sign " + std::to_string(s) +
                                       ", expected " + std::to_string(expected) + " against " +
                                       zero.interval().str()};
        w << x.str() << ":" << (s > 0 ? "+1" : "-1");
    }
    return {Verdict::pass, w.str()};
}

std::vector<Rational> default_sign_samples(const RootInterval& zero) {
    if (zero.is_exact()) {
        const Rational& r = *zero.exact;
        return {r.div_pow2(1), r, r + r};
    }
    return {zero.lo.div_pow2(1), zero.midpoint(), zero.hi + zero.hi, Rational(1)};
}

namespace {

RootRefiner refiner_for(const FamilyIndex& idx, unsigned bits) {
    return {gn_poly(idx), certified_positive_zero(idx, bits)};
}

std::string zero_label(long n, long m) {
    return "r(" + std::to_string(n) + "," + std::to_string(m) + ")";
}

// strict a < b; an exact tie is a definite violation here
CheckResult expect_strictly_less(const std::string& label_a, RootRefiner& a,
                                 const std::string& label_b, RootRefiner& b) {
    switch (separate(a, b, kRefineCap)) {
        case Order::less:
            return {Verdict::pass,
                    label_a + "=" + a.interval().str() + " < " + label_b + "=" + b.interval().str()};
        case Order::greater:
            return {Verdict::fail,
                    label_a + "=" + a.interval().str() + " > " + label_b + "=" + b.interval().str()};
        case Order::equal:
            return {Verdict::fail, label_a + " = " + label_b + " = " + a.interval().str()};
        case Order::unseparated:
            return {Verdict::undecided, label_a + "=" + a.interval().str() + " and " + label_b +
                                            "=" + b.interval().str() + " unseparated after " +
                                            std::to_string(kRefineCap) + " rounds"};
    }
    return {Verdict::undecided, "unreachable"};
}

Verdict worst(Verdict a, Verdict b) {
    if (a == Verdict::fail || b == Verdict::fail) return Verdict::fail;
    if (a == Verdict::undecided || b == Verdict::undecided) return Verdict::undecided;
    return Verdict::pass;
}

}  // namespace

Verdict MonotonicityResult::overall() const {
    Verdict v = worst(decrease_in_n.verdict, diagonal.verdict);
    if (increase_applicable) v = worst(v, increase_in_m.verdict);
    return v;
}

std::string MonotonicityResult::witness() const {
    std::string w = decrease_in_n.witness + "; " + diagonal.witness;
    if (increase_applicable) w += "; " + increase_in_m.witness;
    return w;
}

MonotonicityResult verify_monotonicity(long m, long n, unsigned bits) {
    if (m < 0 || n < m + 3) throw std::invalid_argument("verify_monotonicity: requires n >= m+3");

    MonotonicityResult res;
    res.increase_applicable = n >= m + 4;

    RootRefiner r_nm = refiner_for({n, m}, bits);
    RootRefiner r_n1m = refiner_for({n + 1, m}, bits);
    RootRefiner r_n1m1 = refiner_for({n + 1, m + 1}, bits);

    res.decrease_in_n = expect_strictly_less(zero_label(n + 1, m), r_n1m, zero_label(n, m), r_nm);
    res.diagonal = expect_strictly_less(zero_label(n + 1, m + 1), r_n1m1, zero_label(n, m), r_nm);
    if (res.increase_applicable) {
        RootRefiner r_nm1 = refiner_for({n, m + 1}, bits);
        res.increase_in_m = expect_strictly_less(zero_label(n, m), r_nm, zero_label(n, m + 1), r_nm1);
    } else {
        res.increase_in_m = {Verdict::pass, "third inequality needs n >= m+4"};
    }
    return res;
}

CheckResult verify_interlacing(const FamilyIndex& idx, unsigned bits) {
    const long n = idx.n;
    const long m = idx.m;
    if (n < m + 2) throw std::invalid_argument("verify_interlacing: requires n >= m+2");

    const Poly p_v = gn_poly(idx);
    const Poly p_u = gn_poly({n + 1, m + 1});
    auto v_iv = isolate_roots_in(p_v, -cauchy_root_bound(p_v), Rational(0), bits);
    auto u_iv = isolate_roots_in(p_u, -cauchy_root_bound(p_u), Rational(0), bits);
    if (static_cast<long>(v_iv.size()) != m || static_cast<long>(u_iv.size()) != m + 1)
        return {Verdict::fail, "negative zero counts " + std::to_string(u_iv.size()) + " and " +
                                   std::to_string(v_iv.size()) + ", expected " +
                                   std::to_string(m + 1) + " and " + std::to_string(m)};

    std::vector<RootRefiner> u;
    std::vector<RootRefiner> v;
    u.reserve(u_iv.size());
    v.reserve(v_iv.size());
    for (auto& iv : u_iv) u.emplace_back(p_u, std::move(iv));
    for (auto& iv : v_iv) v.emplace_back(p_v, std::move(iv));

    auto require_less = [](RootRefiner& a, RootRefiner& b,
                           const std::string& pair) -> std::optional<CheckResult> {
        switch (separate(a, b, kRefineCap)) {
            case Order::less:
                return std::nullopt;
            case Order::greater:
                return CheckResult{Verdict::fail, "order violated at " + pair + ": " +
                                                      a.interval().str() + " vs " +
                                                      b.interval().str()};
            case Order::equal:
                return CheckResult{Verdict::undecided,
                                   "tie at " + pair + ": " + a.interval().str()};
            case Order::unseparated:
                return CheckResult{Verdict::undecided, pair + " unseparated after " +
                                                           std::to_string(kRefineCap) + " rounds"};
        }
        return CheckResult{Verdict::undecided, "unreachable"};
    };

    for (long i = 0; i < m; ++i) {
        const std::string si = std::to_string(i + 1);
        if (auto bad = require_less(u[i], v[i], "u" + si + "<v" + si)) return *bad;
        if (auto bad = require_less(v[i], u[i + 1], "v" + si + "<u" + std::to_string(i + 2)))
            return *bad;
    }

    std::ostringstream w;
    w << "u=";
    for (std::size_t i = 0; i < u.size(); ++i) w << (i ? "," : "") << u[i].interval().str();
    w << ";v=";
    for (std::size_t i = 0; i < v.size(); ++i) w << (i ? "," : "") << v[i].interval().str();
    return {Verdict::pass, w.str()};
}

CheckResult verify_census(const FamilyIndex& idx, unsigned bits) {
    const long n = idx.n;
    const long m = idx.m;
    if (n < m + 2) throw std::invalid_argument("verify_census: requires n >= m+2");

    const Poly p = gn_poly(idx);
    if (!is_squarefree(p)) return {Verdict::fail, "gcd(p, p') is nonconstant"};

    const long deg = static_cast<long>(*p.degree());
    const int positive = count_real_roots(p, Rational(0), std::nullopt);
    const int negative = count_real_roots(p, std::nullopt, Rational(0));
    const int total = count_real_roots(p, std::nullopt, std::nullopt);
    const auto isolated = isolate_roots_in(p, -cauchy_root_bound(p), Rational(0), bits);

    std::ostringstream w;
    w << "deg=" << deg << ";positive=" << positive << ";negative=" << negative << ";total=" << total
      << ";isolated_negative=" << isolated.size();
    const bool ok = deg == m + 1 && positive == 1 && negative == m && total == m + 1 &&
                    static_cast<long>(isolated.size()) == m;
    return {ok ? Verdict::pass : Verdict::fail, w.str()};
}

CheckResult verify_proposition(long m, long n_max, unsigned bits,
                               const std::optional<Rational>& epsilon) {
    if (m < 0 || n_max < m + 3)
        throw std::invalid_argument("verify_proposition: requires n_max >= m+3");

    const Rational third(1, 3);
    Rational last_upper;
    for (long n = m + 3; n <= n_max; ++n) {
        const FamilyIndex idx{n, m};
        RootRefiner zero(gn_poly(idx), certified_positive_zero(idx, bits));
        const bool equality_allowed = n == 3 && m == 0;

        int rounds = 0;
        for (;;) {
            const RootInterval& iv = zero.interval();
            if (iv.lo.sign() <= 0)
                return {Verdict::fail, "enclosure touches 0 at n=" + std::to_string(n)};
            if (iv.exact) {
                if (*iv.exact > third)
                    return {Verdict::fail, "zero " + iv.exact->str() + " > 1/3 at n=" + std::to_string(n)};
                if (*iv.exact == third && !equality_allowed)
                    return {Verdict::fail, "zero equals 1/3 at n=" + std::to_string(n) +
                                               ", allowed only at (3,0)"};
                break;
            }
            if (iv.hi < third) break;
            if (iv.hi > third)
                return {Verdict::fail, "enclosure exceeds 1/3 at n=" + std::to_string(n)};
            if (rounds++ >= kRefineCap)
                return {Verdict::undecided,
                        "enclosure upper endpoint stuck at 1/3 at n=" + std::to_string(n)};
            zero.refine();
        }

        const Rational upper = positive_zero_bounds(idx).upper;
        if (n > m + 3 && !(upper < last_upper))
            return {Verdict::fail, "upper bound not strictly decreasing at n=" + std::to_string(n)};
        last_upper = upper;
    }

    std::ostringstream w;
    w << "n=" << (m + 3) << ".." << n_max << ";zeros in (0,1/3];upper(" << n_max
      << ")=" << last_upper.str();
    if (epsilon) {
        if (!(last_upper < *epsilon))
            return {Verdict::fail, "upper(" + std::to_string(n_max) + ")=" + last_upper.str() +
                                       " >= epsilon=" + epsilon->str()};
        w << "<" << epsilon->str();
    }
    return {Verdict::pass, w.str()};
}

bool ZeroReport::all_pass() const {
    for (const auto& [name, ok] : checks)
        if (!ok) return false;
    return true;
}

ZeroReport build_zero_report(const FamilyIndex& idx, unsigned bits) {
    const long n = idx.n;
    const long m = idx.m;
    if (n < m + 2) throw std::invalid_argument("build_zero_report: requires n >= m+2");

    const Poly p = gn_poly(idx);
    if (!is_squarefree(p))
        throw non_squarefree_error("build_zero_report: N" + idx.str() + " has a repeated root");

    // n == m+2 has no two-sided bound; the zero there is exactly 1
    ZeroReport rep{idx,
                   n >= m + 3 ? positive_zero_bounds(idx) : BoundPair{Rational(1), Rational(1), idx},
                   certified_positive_zero(idx, bits),
                   isolate_roots_in(p, -cauchy_root_bound(p), Rational(0), bits),
                   {}};

    rep.checks["squarefree"] = true;
    rep.checks["unique_positive_zero"] = true;  // count verified during certification
    rep.checks["negative_zero_count"] = static_cast<long>(rep.negative_zeros.size()) == m;
    rep.checks["zero_in_bracket"] =
        rep.bracket.lower <= rep.positive_zero.lo && rep.positive_zero.hi <= rep.bracket.upper;
    if (n >= m + 3) rep.checks["bounds_signs"] = verify_bounds(idx).verdict == Verdict::pass;
    return rep;
}

}  // namespace gnp
