#pragma once

#include <vector>

#include "strata/poly.hpp"

namespace strata {

/// Dense univariate polynomial over Q; coeffs[i] multiplies x^i.
/// No trailing zeros are stored; the zero polynomial is empty.
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::vector<Rational> coeffs);

    /// Throws if f mentions any variable other than v.
    static UPoly from_poly(const Poly& f, VarId v);
    Poly to_poly(VarId v) const;

    const std::vector<Rational>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const Rational& lead() const { return c_.back(); }

    UPoly monic() const;
    UPoly derivative() const;
    Rational eval(const Rational& x) const;

    friend UPoly operator+(const UPoly& a, const UPoly& b);
    friend UPoly operator-(const UPoly& a, const UPoly& b);
    friend UPoly operator*(const UPoly& a, const UPoly& b);
    friend bool operator==(const UPoly&, const UPoly&) = default;

    /// Euclidean division: a = q*b + r with deg r < deg b.
    static void divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r);

private:
    void trim();
    std::vector<Rational> c_;
};

/// Monic gcd (zero if both inputs are zero).
UPoly gcd(const UPoly& a, const UPoly& b);

struct SquarefreeFactor {
    Poly factor;
    int multiplicity;
};

/// Yun's algorithm. The product of factor^multiplicity equals f up to a
/// nonzero rational constant; factors are monic, squarefree and pairwise
/// coprime. Throws if f involves any variable other than v or is zero.
std::vector<SquarefreeFactor> squarefree_decompose(const Poly& f, VarId v);

}  // namespace strata
