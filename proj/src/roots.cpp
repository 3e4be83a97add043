#include "gnp/roots.hpp"

#include <algorithm>
#include <utility>

namespace gnp {

std::string RootInterval::str() const {
    if (exact) return "{" + exact->str() + "}";
    return "[" + lo.str() + "," + hi.str() + "]";
}

SturmChain::SturmChain(Poly p) {
    if (p.is_zero()) throw std::invalid_argument("SturmChain: zero polynomial");
    chain_.push_back(std::move(p));
    if (*chain_.front().degree() >= 1) {
        chain_.push_back(chain_.front().derivative());
        for (;;) {
            Poly r = divmod(chain_[chain_.size() - 2], chain_.back()).rem;
            if (r.is_zero()) break;
            chain_.push_back(-r);
        }
    }
}

bool SturmChain::squarefree() const { return *chain_.back().degree() == 0; }

int SturmChain::variations_at(const Rational& x) const {
    int v = 0;
    int prev = 0;
    for (const Poly& q : chain_) {
        const int s = q.eval(x).sign();
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

int SturmChain::variations_pos_inf() const {
    int v = 0;
    int prev = 0;
    for (const Poly& q : chain_) {
        const int s = q.leading().sign();
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

int SturmChain::variations_neg_inf() const {
    int v = 0;
    int prev = 0;
    for (const Poly& q : chain_) {
        int s = q.leading().sign();
        if (*q.degree() % 2 == 1) s = -s;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

int SturmChain::count(const std::optional<Rational>& lo,
                      const std::optional<Rational>& hi) const {
    const int va = lo ? variations_at(*lo) : variations_neg_inf();
    const int vb = hi ? variations_at(*hi) : variations_pos_inf();
    if (va < vb) throw std::logic_error("SturmChain::count: negative variation difference");
    return va - vb;
}

int count_real_roots(const Poly& p, const std::optional<Rational>& lo,
                     const std::optional<Rational>& hi) {
    SturmChain chain(p);
    if (!chain.squarefree())
        throw non_squarefree_error("count_real_roots: repeated real root, gcd(p, p') is nonconstant");
    if (lo && hi && !(*lo < *hi)) throw std::invalid_argument("count_real_roots: requires lo < hi");
    if (lo && p.eval(*lo).is_zero()) throw std::invalid_argument("count_real_roots: lo is a root of p");
    if (hi && p.eval(*hi).is_zero()) throw std::invalid_argument("count_real_roots: hi is a root of p");
    return chain.count(lo, hi);
}

int descartes_positive_count(const Poly& p) {
    if (p.is_zero()) throw std::invalid_argument("descartes_positive_count: zero polynomial");
    int v = 0;
    int prev = 0;
    for (const Rational& c : p.coeffs()) {
        const int s = c.sign();
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

bool is_squarefree(const Poly& p) {
    if (p.is_zero()) throw std::invalid_argument("is_squarefree: zero polynomial");
    if (*p.degree() == 0) return true;
    return *poly_gcd(p, p.derivative()).degree() == 0;
}

Rational cauchy_root_bound(const Poly& p) {
    if (p.is_zero()) throw std::invalid_argument("cauchy_root_bound: zero polynomial");
    Rational max_ratio;
    const Rational lead = p.leading().abs();
    for (std::size_t k = 0; k < *p.degree(); ++k)
        max_ratio = std::max(max_ratio, p.coeff(k).abs() / lead);
    return Rational(1) + max_ratio;
}

namespace {

// Bisects a strict sign-change bracket that contains exactly one root.
// Degree-1 polynomials are solved exactly instead of bisected.
RootInterval bisect_bracket(const Poly& p, Rational lo, Rational hi, int lo_sign, unsigned bits) {
    if (*p.degree() == 1) {
        Rational r = -p.coeff(0) / p.coeff(1);
        return {r, r, r};
    }
    const Rational target = (hi - lo).div_pow2(bits);
    while (hi - lo > target) {
        Rational mid = (lo + hi).div_pow2(1);
        const Rational fm = p.eval(mid);
        if (fm.is_zero()) return {mid, mid, mid};
        if (fm.sign() == lo_sign)
            lo = std::move(mid);
        else
            hi = std::move(mid);
    }
    return {std::move(lo), std::move(hi), std::nullopt};
}

// Emits all roots in (a, b]. p(a) may vanish only when a was already recorded
// as an exact root by the caller's previous cell.
void isolate_rec(const SturmChain& chain, Rational a, Rational b, unsigned bits,
                 std::vector<RootInterval>& out) {
    const Poly& p = chain.poly();
    for (;;) {
        const int c = chain.count(a, b);
        if (c == 0) return;
        if (c == 1) {
            if (p.eval(b).is_zero()) {
                out.push_back({b, b, b});
                return;
            }
            const Rational fa = p.eval(a);
            if (fa.is_zero()) {
                // step past the root sitting at a without losing the one in (a, b)
                Rational step = (b - a).div_pow2(1);
                for (;;) {
                    Rational t = a + step;
                    if (!p.eval(t).is_zero() && chain.count(a, t) == 0) {
                        a = std::move(t);
                        break;
                    }
                    step = step.div_pow2(1);
                }
                continue;
            }
            out.push_back(bisect_bracket(p, std::move(a), std::move(b), fa.sign(), bits));
            return;
        }
        Rational mid = (a + b).div_pow2(1);
        isolate_rec(chain, a, mid, bits, out);
        a = std::move(mid);
    }
}

}  // namespace

RootInterval isolate_unique_root(const Poly& p, const Rational& lo, const Rational& hi,
                                 unsigned bits) {
    if (p.is_zero()) throw std::invalid_argument("isolate_unique_root: zero polynomial");
    if (lo > hi) throw std::invalid_argument("isolate_unique_root: empty bracket");
    const Rational flo = p.eval(lo);
    const Rational fhi = p.eval(hi);
    if (flo.is_zero() && fhi.is_zero() && lo != hi)
        throw std::invalid_argument("isolate_unique_root: both endpoints are roots");
    if (flo.is_zero()) return {lo, lo, lo};
    if (fhi.is_zero()) return {hi, hi, hi};
    if (flo.sign() == fhi.sign())
        throw std::invalid_argument("isolate_unique_root: same-sign endpoints");
    SturmChain chain(p);
    if (chain.squarefree() && chain.count(lo, hi) != 1)
        throw std::invalid_argument("isolate_unique_root: more than one root in bracket");
    return bisect_bracket(p, lo, hi, flo.sign(), bits);
}

std::vector<RootInterval> isolate_roots_in(const Poly& p, const Rational& lo,
                                           const Rational& hi, unsigned bits) {
    if (!(lo < hi)) throw std::invalid_argument("isolate_roots_in: requires lo < hi");
    SturmChain chain(p);
    if (!chain.squarefree())
        throw non_squarefree_error("isolate_roots_in: repeated real root, gcd(p, p') is nonconstant");
    if (p.eval(lo).is_zero() || p.eval(hi).is_zero())
        throw std::invalid_argument("isolate_roots_in: endpoints must not be roots");
    std::vector<RootInterval> out;
    isolate_rec(chain, lo, hi, bits, out);
    return out;
}

RootRefiner::RootRefiner(Poly p, RootInterval iv) : p_(std::move(p)), iv_(std::move(iv)) {
    if (!iv_.is_exact()) {
        lo_sign_ = p_.eval(iv_.lo).sign();
        const int hi_sign = p_.eval(iv_.hi).sign();
        if (lo_sign_ == 0 || hi_sign == 0 || lo_sign_ == hi_sign)
            throw std::invalid_argument("RootRefiner: endpoints must have opposite nonzero signs");
    }
}

void RootRefiner::refine() {
    if (iv_.is_exact()) return;
    Rational mid = iv_.midpoint();
    const Rational fm = p_.eval(mid);
    if (fm.is_zero()) {
        iv_ = {mid, mid, mid};
        return;
    }
    if (fm.sign() == lo_sign_)
        iv_.lo = std::move(mid);
    else
        iv_.hi = std::move(mid);
}

namespace {

// root(a) < root(b) with certainty; non-exact roots lie strictly inside their
// open intervals, so a shared endpoint still separates
bool definitely_less(const RootInterval& a, const RootInterval& b) {
    if (a.exact && b.exact) return *a.exact < *b.exact;
    if (a.exact) return *a.exact <= b.lo;
    if (b.exact) return a.hi <= *b.exact;
    return a.hi <= b.lo;
}

}  // namespace

Order separate(RootRefiner& a, RootRefiner& b, int max_rounds) {
    for (int round = 0;; ++round) {
        const RootInterval& ia = a.interval();
        const RootInterval& ib = b.interval();
        if (ia.is_exact() && ib.is_exact() && *ia.exact == *ib.exact) return Order::equal;
        if (definitely_less(ia, ib)) return Order::less;
        if (definitely_less(ib, ia)) return Order::greater;
        if (round >= max_rounds) return Order::unseparated;
        a.refine();
        b.refine();
    }
}

}  // namespace gnp
