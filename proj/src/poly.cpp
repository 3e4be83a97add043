#include "gnp/poly.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace gnp {

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { normalize(); }

Poly::Poly(std::initializer_list<Rational> coeffs) : c_(coeffs) { normalize(); }

Poly Poly::monomial(const Rational& c, std::size_t k) {
    if (c.is_zero()) return {};
    std::vector<Rational> v(k + 1);
    v[k] = c;
    return Poly(std::move(v));
}

void Poly::normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

std::optional<std::size_t> Poly::degree() const {
    if (c_.empty()) return std::nullopt;
    return c_.size() - 1;
}

const Rational& Poly::coeff(std::size_t k) const {
    static const Rational zero;
    return k < c_.size() ? c_[k] : zero;
}

const Rational& Poly::leading() const {
    if (c_.empty()) throw std::invalid_argument("Poly: zero polynomial has no leading coefficient");
    return c_.back();
}

Rational Poly::eval(const Rational& x) const {
    Rational acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rational> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = Rational(static_cast<long>(k)) * c_[k];
    return Poly(std::move(d));
}

Poly Poly::operator-() const {
    Poly r(*this);
    for (auto& c : r.c_) c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    normalize();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    normalize();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return Poly(std::move(r));
}

Poly operator*(const Rational& s, const Poly& p) {
    if (s.is_zero()) return {};
    Poly r(p);
    for (auto& c : r.c_) c *= s;
    return r;
}

std::string Poly::str(std::string_view var) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        const Rational& c = c_[k];
        if (c.is_zero()) continue;
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        os << c.abs().str();
        if (k >= 1) {
            os << "*" << var;
            if (k >= 2) os << "^" << k;
        }
    }
    return os.str();
}

PolyDivMod divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::invalid_argument("divmod: division by zero polynomial");
    if (a.is_zero() || *a.degree() < *b.degree()) return {{}, a};

    const std::size_t da = *a.degree();
    const std::size_t db = *b.degree();
    std::vector<Rational> rem(a.coeffs());
    std::vector<Rational> quot(da - db + 1);
    const Rational& lead = b.leading();
    for (std::size_t k = da - db + 1; k-- > 0;) {
        Rational q = rem[k + db] / lead;
        if (q.is_zero()) continue;
        quot[k] = q;
        for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= q * b.coeff(j);
    }
    return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly poly_gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = divmod(a, b).rem;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.leading().reciprocal() * a;
}

}  // namespace gnp
