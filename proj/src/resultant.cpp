#include "strata/resultant.hpp"

namespace strata {

namespace {

using Coeffs = std::vector<Poly>;  // coefficients in v, index = power

int deg(const Coeffs& c) { return static_cast<int>(c.size()) - 1; }

void trim(Coeffs& c) {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
}

Coeffs to_coeffs(const Poly& f, VarId v) {
    Coeffs c = f.coefficients_in(v);
    trim(c);
    return c;
}

Poly from_coeffs(const Coeffs& c, VarId v) { return Poly::from_coefficients(c, v); }

Coeffs prem(const Coeffs& a, const Coeffs& b) {
    int db = deg(b);
    Coeffs r = a;
    const Poly& lb = b.back();
    int steps = deg(a) - db + 1;
    while (deg(r) >= db && !r.empty()) {
        int shift = deg(r) - db;
        Poly lr = r.back();
        for (auto& x : r) x *= lb;
        for (int i = 0; i <= db; ++i) r[shift + i] -= lr * b[i];
        trim(r);
        --steps;
    }
    if (steps > 0) {
        Poly f = lb.pow(static_cast<unsigned>(steps));
        for (auto& x : r) x *= f;
    }
    return r;
}

Coeffs divide_all(const Coeffs& c, const Poly& d) {
    Coeffs out;
    out.reserve(c.size());
    for (const auto& x : c) out.push_back(exact_divide(x, d));
    return out;
}

}  // namespace

Poly pseudo_remainder(const Poly& a, const Poly& b, VarId v) {
    Coeffs cb = to_coeffs(b, v);
    if (cb.empty()) throw Error("pseudo_remainder: zero divisor");
    Coeffs ca = to_coeffs(a, v);
    if (deg(ca) < deg(cb)) return a;
    return from_coeffs(prem(ca, cb), v);
}

Poly resultant_eliminate(const Poly& f, const Poly& g, VarId v) {
    Coeffs a = to_coeffs(f, v);
    Coeffs b = to_coeffs(g, v);
    if (deg(a) < 1 || deg(b) < 1) {
        throw Error("resultant_eliminate: both inputs need positive degree in " + v.name());
    }
    Poly sign(1L);
    if (deg(a) < deg(b)) {
        if ((deg(a) % 2 == 1) && (deg(b) % 2 == 1)) sign = Poly(-1L);
        std::swap(a, b);
    }
    Poly gcoef(1L);
    Poly h(1L);
    while (true) {
        int delta = deg(a) - deg(b);
        if (deg(a) % 2 == 1 && deg(b) % 2 == 1) sign = -sign;
        Coeffs r = prem(a, b);
        a = std::move(b);
        if (r.empty()) return Poly{};
        b = divide_all(r, gcoef * h.pow(static_cast<unsigned>(delta)));
        gcoef = a.back();
        if (delta == 0) {
            // h unchanged
        } else {
            h = exact_divide(gcoef.pow(static_cast<unsigned>(delta)), h.pow(static_cast<unsigned>(delta - 1)));
        }
        if (deg(b) == 0) {
            int da = deg(a);
            Poly res = exact_divide(b.back().pow(static_cast<unsigned>(da)), h.pow(static_cast<unsigned>(da - 1)));
            return sign * res;
        }
    }
}

}  // namespace strata
