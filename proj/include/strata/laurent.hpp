#pragma once

#include <map>
#include <vector>

#include <json.hpp>

#include "strata/poly.hpp"

namespace strata {

/// Truncated Laurent series in z: coefficients are known exactly on the
/// window [floor, top] and unknown below floor.
class LaurentSeries {
public:
    LaurentSeries() = default;
    /// All coefficients zero on [floor, top].
    LaurentSeries(int top, int floor);
    /// Exact monomial c * z^e, valid down to `floor`.
    static LaurentSeries monomial(int e, Poly c, int floor);
    /// The constant 1 as a series valid down to `floor`.
    static LaurentSeries one(int floor) { return monomial(0, Poly(1L), floor); }

    int top() const { return top_; }
    int floor() const { return floor_; }
    /// Coefficient at z^e; zero above top, throws below floor.
    const Poly& coeff(int e) const;
    void set(int e, Poly c);
    void add_to(int e, const Poly& c);

    /// Largest exponent with nonzero coefficient, if any.
    std::optional<int> leading_exponent() const;

    LaurentSeries operator+(const LaurentSeries& o) const;
    LaurentSeries operator-(const LaurentSeries& o) const;
    LaurentSeries scaled(const Poly& c) const;
    /// Same coefficients re-read with a higher floor (coarsening).
    LaurentSeries truncated(int new_floor) const;

    /// Applies a polynomial map to every coefficient.
    template <typename F>
    LaurentSeries map_coeffs(F&& fn) const {
        LaurentSeries r(top_, floor_);
        for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = fn(c_[i]);
        return r;
    }

    nlohmann::json to_json() const;
    static LaurentSeries from_json(const nlohmann::json& j);

    friend bool operator==(const LaurentSeries&, const LaurentSeries&) = default;

private:
    int top_ = 0;
    int floor_ = 0;
    std::vector<Poly> c_;  // c_[e - floor_]
};

/// Exact convolution on the reliable window:
/// top = f.top + g.top, floor = max(f.floor + g.top, g.floor + f.top).
LaurentSeries series_multiply(const LaurentSeries& f, const LaurentSeries& g);

/// Multiplication by z^(2n).
LaurentSeries shift_even(const LaurentSeries& f, int n);

LaurentSeries series_substitute(const LaurentSeries& f, const std::map<VarId, Poly>& bindings);

}  // namespace strata
