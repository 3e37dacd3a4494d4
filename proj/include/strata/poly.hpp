#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace strata {

using Rational = mpq_class;
using Integer = mpz_class;

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

std::string to_string(const Rational& q);
Rational parse_rational(std::string_view text);

/// Variables are totally ordered by (kind, j, k):
/// z < lam < p0 < p1 < ... < H[j,k] (lexicographic in (j,k)) < t < X < Y.
enum class VarKind : std::uint8_t { Z, Lambda, P, H, T, X, Y };

struct VarId {
    VarKind kind = VarKind::Z;
    int j = 0;
    int k = 0;

    static constexpr VarId z() { return {VarKind::Z, 0, 0}; }
    static constexpr VarId lambda() { return {VarKind::Lambda, 0, 0}; }
    static constexpr VarId p(int j) { return {VarKind::P, j, 0}; }
    static constexpr VarId H(int j, int k) { return {VarKind::H, j, k}; }
    static constexpr VarId t() { return {VarKind::T, 0, 0}; }
    static constexpr VarId X() { return {VarKind::X, 0, 0}; }
    static constexpr VarId Y() { return {VarKind::Y, 0, 0}; }

    bool is_param() const { return kind == VarKind::H; }
    /// Weight of a parameter H[j,k] is j + k.
    int weight() const { return j + k; }
    std::string name() const;

    friend constexpr auto operator<=>(const VarId&, const VarId&) = default;
};

VarId parse_var(std::string_view text);

/// Exponent vector: sorted ascending by VarId, no zero exponents.
class Monomial {
public:
    using Entry = std::pair<VarId, unsigned>;

    Monomial() = default;
    explicit Monomial(VarId v, unsigned e = 1);
    static Monomial from_entries(std::vector<Entry> entries);

    const std::vector<Entry>& entries() const { return entries_; }
    bool is_one() const { return entries_.empty(); }
    unsigned degree() const;
    unsigned degree_in(VarId v) const;
    bool contains(VarId v) const { return degree_in(v) > 0; }
    std::optional<VarId> max_var() const;

    Monomial operator*(const Monomial& o) const;
    bool divides(const Monomial& o) const;
    /// Requires divides(o).
    Monomial quotient(const Monomial& o) const;
    Monomial without(VarId v) const;
    Monomial lcm(const Monomial& o) const;

    std::string str() const;

    friend bool operator==(const Monomial&, const Monomial&) = default;

private:
    std::vector<Entry> entries_;
};

/// Graded lexicographic comparison: total degree first, then exponents
/// compared from the largest variable downward. Returns <0, 0, >0.
int grlex_compare(const Monomial& a, const Monomial& b);
/// Pure lexicographic comparison, largest variable first.
int lex_compare(const Monomial& a, const Monomial& b);

struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const { return grlex_compare(a, b) < 0; }
};

struct Term {
    Monomial mono;
    Rational coeff;
    friend bool operator==(const Term& a, const Term& b) { return a.mono == b.mono && a.coeff == b.coeff; }
};

/// Sparse multivariate polynomial with rational coefficients. Terms are
/// kept sorted in descending grlex order with no zero coefficients.
class Poly {
public:
    Poly() = default;
    Poly(long c);  // NOLINT(google-explicit-constructor)
    Poly(const Rational& c);  // NOLINT(google-explicit-constructor)
    explicit Poly(VarId v, unsigned e = 1);
    Poly(Monomial m, Rational c);
    static Poly from_terms(std::vector<Term> terms);

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Constant term value; throws if not constant.
    Rational constant_value() const;
    Rational constant_term() const;
    std::size_t size() const { return terms_.size(); }

    const Term& leading() const { return terms_.front(); }
    unsigned total_degree() const;
    unsigned degree_in(VarId v) const;
    std::set<VarId> variables() const;
    bool contains(VarId v) const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly scaled(const Rational& c) const;
    Poly pow(unsigned k) const;

    friend bool operator==(const Poly&, const Poly&) = default;

    /// Coefficients as a univariate polynomial in v: result[i] is the
    /// coefficient of v^i.
    std::vector<Poly> coefficients_in(VarId v) const;
    static Poly from_coefficients(const std::vector<Poly>& coeffs, VarId v);

    /// If this == c*v + rest with c rational and v absent from rest.
    std::optional<Rational> linear_coefficient(VarId v) const;

    Poly derivative(VarId v) const;

    /// Primitive integer form with positive leading coefficient.
    Poly normalized() const;
    /// Content as a positive rational: this = content * primitive.
    Rational content() const;

    std::string str() const;

private:
    void canonicalize();
    std::vector<Term> terms_;
};

Poly parse_poly(std::string_view text);

/// Simultaneous substitution. Self-references (v -> f(v, ...)) are read
/// with the old value; cycles through two or more bound variables throw.
Poly substitute(const Poly& f, const std::map<VarId, Poly>& bindings);
Poly specialize(const Poly& f, const std::map<VarId, Rational>& values);
Poly rename(const Poly& f, const std::map<VarId, VarId>& names);

/// Exact multivariate division; throws if b does not divide a.
Poly exact_divide(const Poly& a, const Poly& b);
std::optional<Poly> try_exact_divide(const Poly& a, const Poly& b);

/// True when f and g agree up to a nonzero rational factor.
bool equal_up_to_scale(const Poly& f, const Poly& g);

/// Multivariate division remainder against `divisors` using lex order.
/// Exact ideal membership when the divisors form a lex Groebner basis.
Poly lex_normal_form(const Poly& f, const std::vector<Poly>& divisors);

enum class ArithOp { Add, Sub, Mul, Pow };
Poly poly_arithmetic(const Poly& a, const Poly& b, ArithOp op, unsigned k = 0);

}  // namespace strata
