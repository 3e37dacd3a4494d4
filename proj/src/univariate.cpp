#include "strata/univariate.hpp"

#include <algorithm>

namespace strata {

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void UPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UPoly UPoly::from_poly(const Poly& f, VarId v) {
    std::vector<Rational> c(f.degree_in(v) + 1);
    for (const auto& t : f.terms()) {
        for (const auto& entry : t.mono.entries()) {
            if (entry.first != v) {
                throw Error("polynomial is not univariate in " + v.name() + ": " + f.str());
            }
        }
        c[t.mono.degree_in(v)] += t.coeff;
    }
    return UPoly(std::move(c));
}

Poly UPoly::to_poly(VarId v) const {
    std::vector<Term> terms;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] != 0) terms.push_back({Monomial(v, static_cast<unsigned>(i)), c_[i]});
    }
    return Poly::from_terms(std::move(terms));
}

UPoly UPoly::monic() const {
    if (is_zero()) return *this;
    UPoly r = *this;
    Rational inv = 1 / lead();
    for (auto& x : r.c_) x *= inv;
    return r;
}

UPoly UPoly::derivative() const {
    std::vector<Rational> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<long>(i));
    return UPoly(std::move(d));
}

Rational UPoly::eval(const Rational& x) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

UPoly operator+(const UPoly& a, const UPoly& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return UPoly(std::move(c));
}

UPoly operator-(const UPoly& a, const UPoly& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
    return UPoly(std::move(c));
}

UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return UPoly(std::move(c));
}

void UPoly::divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r) {
    if (b.is_zero()) throw Error("univariate division by zero");
    std::vector<Rational> rem = a.c_;
    int db = b.degree();
    std::vector<Rational> quot(std::max(0, a.degree() - db + 1));
    Rational inv = 1 / b.lead();
    for (int i = a.degree(); i >= db; --i) {
        Rational f = rem[i] * inv;
        if (f == 0) continue;
        quot[i - db] = f;
        for (int j = 0; j <= db; ++j) rem[i - db + j] -= f * b.c_[j];
    }
    q = UPoly(std::move(quot));
    r = UPoly(std::move(rem));
}

UPoly gcd(const UPoly& a, const UPoly& b) {
    UPoly x = a;
    UPoly y = b;
    while (!y.is_zero()) {
        UPoly q;
        UPoly r;
        UPoly::divmod(x, y, q, r);
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

std::vector<SquarefreeFactor> squarefree_decompose(const Poly& f, VarId v) {
    UPoly a = UPoly::from_poly(f, v);
    if (a.is_zero()) throw Error("squarefree_decompose: zero polynomial");
    std::vector<SquarefreeFactor> out;
    if (a.degree() == 0) return out;
    UPoly q;
    UPoly r;
    UPoly d = a.derivative();
    UPoly g = gcd(a, d);
    UPoly b;
    UPoly c;
    UPoly::divmod(a, g, b, r);
    UPoly::divmod(d, g, c, r);
    UPoly bd = c - b.derivative();
    int i = 1;
    while (b.degree() > 0) {
        UPoly h = gcd(b, bd);
        if (h.degree() > 0) out.push_back({h.to_poly(v), i});
        UPoly nb;
        UPoly nc;
        UPoly::divmod(b, h, nb, r);
        UPoly::divmod(bd, h, nc, r);
        b = nb;
        bd = nc - b.derivative();
        ++i;
    }
    return out;
}

}  // namespace strata
