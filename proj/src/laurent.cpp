#include "strata/laurent.hpp"

#include <algorithm>

namespace strata {

namespace {
const Poly kZero;
}

LaurentSeries::LaurentSeries(int top, int floor) : top_(top), floor_(floor) {
    if (floor > top) throw Error("LaurentSeries: floor " + std::to_string(floor) + " above top " + std::to_string(top));
    c_.resize(static_cast<std::size_t>(top - floor + 1));
}

LaurentSeries LaurentSeries::monomial(int e, Poly c, int floor) {
    LaurentSeries s(std::max(e, floor), floor);
    if (e >= floor) s.set(e, std::move(c));
    return s;
}

const Poly& LaurentSeries::coeff(int e) const {
    if (e > top_) return kZero;
    if (e < floor_) throw Error("coefficient z^" + std::to_string(e) + " is below the floor " + std::to_string(floor_));
    return c_[static_cast<std::size_t>(e - floor_)];
}

void LaurentSeries::set(int e, Poly c) {
    if (e > top_ || e < floor_) throw Error("LaurentSeries::set outside [floor, top]");
    c_[static_cast<std::size_t>(e - floor_)] = std::move(c);
}

void LaurentSeries::add_to(int e, const Poly& c) {
    if (e > top_ || e < floor_) throw Error("LaurentSeries::add_to outside [floor, top]");
    c_[static_cast<std::size_t>(e - floor_)] += c;
}

std::optional<int> LaurentSeries::leading_exponent() const {
    for (int e = top_; e >= floor_; --e) {
        if (!coeff(e).is_zero()) return e;
    }
    return std::nullopt;
}

LaurentSeries LaurentSeries::operator+(const LaurentSeries& o) const {
    LaurentSeries r(std::max(top_, o.top_), std::max(floor_, o.floor_));
    for (int e = r.floor_; e <= r.top_; ++e) r.set(e, coeff(e) + o.coeff(e));
    return r;
}

LaurentSeries LaurentSeries::operator-(const LaurentSeries& o) const {
    LaurentSeries r(std::max(top_, o.top_), std::max(floor_, o.floor_));
    for (int e = r.floor_; e <= r.top_; ++e) r.set(e, coeff(e) - o.coeff(e));
    return r;
}

LaurentSeries LaurentSeries::scaled(const Poly& c) const {
    return map_coeffs([&](const Poly& x) { return x * c; });
}

LaurentSeries LaurentSeries::truncated(int new_floor) const {
    if (new_floor <= floor_) return *this;
    LaurentSeries r(std::max(top_, new_floor), new_floor);
    for (int e = new_floor; e <= top_; ++e) r.set(e, coeff(e));
    return r;
}

nlohmann::json LaurentSeries::to_json() const {
    nlohmann::json coeffs = nlohmann::json::object();
    for (int e = floor_; e <= top_; ++e) {
        const Poly& c = coeff(e);
        if (!c.is_zero()) coeffs[std::to_string(e)] = c.str();
    }
    return {{"top", top_}, {"floor", floor_}, {"coeffs", coeffs}};
}

LaurentSeries LaurentSeries::from_json(const nlohmann::json& j) {
    LaurentSeries s(j.at("top").get<int>(), j.at("floor").get<int>());
    for (const auto& [key, value] : j.at("coeffs").items()) {
        s.set(std::stoi(key), parse_poly(value.get<std::string>()));
    }
    return s;
}

LaurentSeries series_multiply(const LaurentSeries& f, const LaurentSeries& g) {
    const int top = f.top() + g.top();
    const int floor = std::max(f.floor() + g.top(), g.floor() + f.top());
    LaurentSeries r(top, floor);
    for (int a = f.top(); a >= f.floor(); --a) {
        const Poly& fa = f.coeff(a);
        if (fa.is_zero()) continue;
        // b ranges so that floor <= a + b <= top.
        int bmin = std::max(g.floor(), floor - a);
        for (int b = g.top(); b >= bmin; --b) {
            const Poly& gb = g.coeff(b);
            if (gb.is_zero()) continue;
            r.add_to(a + b, fa * gb);
        }
    }
    return r;
}

LaurentSeries shift_even(const LaurentSeries& f, int n) {
    if (n < 0) throw Error("shift_even: negative shift");
    if (n == 0) return f;
    LaurentSeries r(f.top() + 2 * n, f.floor() + 2 * n);
    for (int e = f.floor(); e <= f.top(); ++e) r.set(e + 2 * n, f.coeff(e));
    return r;
}

LaurentSeries series_substitute(const LaurentSeries& f, const std::map<VarId, Poly>& bindings) {
    return f.map_coeffs([&](const Poly& c) { return substitute(c, bindings); });
}

}  // namespace strata
