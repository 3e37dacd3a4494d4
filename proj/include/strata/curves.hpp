#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "strata/closure.hpp"

namespace strata {

enum class CurveKind { Veronese, Hyperelliptic, Plane, SingularFamily, IdealGenerator };

std::string to_string(CurveKind kind);
/// Accepts veronese, hyperelliptic, plane, singular, ideal.
CurveKind parse_curve_kind(std::string_view text);

struct GenusCertificate {
    int genus = 0;
    /// squarefree-hyperelliptic | squarefree-part-normalization | polynomial-parameterization
    std::string method;
    nlohmann::json evidence;

    nlohmann::json to_json() const;
};

struct CurveRecord {
    int stratum = 0;
    CurveKind kind = CurveKind::Plane;
    std::string label;
    /// Primitive, positive leading coefficient.
    Poly poly;
    std::vector<VarId> params;
    std::optional<GenusCertificate> genus;
    /// Kind-specific data (alpha_n, u_k, square factors, ...).
    nlohmann::json extra = nlohmann::json::object();

    nlohmann::json to_json() const;
};

/// Builds a record: normalizes the polynomial and collects its parameters.
CurveRecord make_record(int stratum, CurveKind kind, std::string label, const Poly& poly);

// ---------------------------------------------------------------- series

/// lambda = z^2 valid down to `floor`.
LaurentSeries lambda_series(int floor);
LaurentSeries series_power(const LaurentSeries& f, unsigned k);
LaurentSeries specialize_series(const LaurentSeries& s, const std::map<VarId, Rational>& at);

/// Substitutes series for the bound formal variables of f (lam and p_j);
/// parameters stay in the coefficients.
LaurentSeries evaluate_on_series(const Poly& f, const std::map<VarId, LaurentSeries>& values);

/// Exact polynomial in z; throws if a coefficient below z^0 is nonzero.
Poly polynomial_in_z(const LaurentSeries& s);

/// p_j of a solved stratum as a polynomial in z (optionally specialized);
/// throws when a tail coefficient survives.
Poly polynomial_element(const SolvedStratum& s, int j, const std::map<VarId, Rational>& at = {});

/// Greedy expansion target = sum_e c_e q^e with q = z + lower terms.
struct PowerExpansion {
    /// Polynomial in `name` (the symbol standing for q).
    Poly poly;
    /// Nonvanishing coefficients left below z^0.
    std::map<int, Poly> residual;
    int checked_floor = 0;
};
PowerExpansion expand_in_powers(const LaurentSeries& target, const LaurentSeries& q, VarId name,
                                const SolvedStratum* s = nullptr);

/// target = A(lam) * gen + B(lam) where gen has odd order d.
struct LambdaDecomposition {
    Poly a;  // in lam
    Poly b;  // in lam
    std::map<int, Poly> residual;
    int checked_floor = 0;
};
LambdaDecomposition decompose_over_lambda(const LaurentSeries& target, const LaurentSeries& gen, int gen_order,
                                          const SolvedStratum* s = nullptr);

// ---------------------------------------------------------------- curves

/// The big cell as polynomials in p1: record 0 is lam - P_0(p1), record n
/// is p_{2n+1} - P_n(p1) for n = 1..count with alpha_n in `extra`.
std::vector<CurveRecord> veronese_tower(const SolvedStratum& sigma0, int count);

/// p_{2n+1}^2 = lam^{2n+1} + sum u_k lam^k read off by squaring the
/// solved series of Sigma_{2n} (Sigma_0 for n = 0).
CurveRecord hyperelliptic_curve(int n, const SolvedStratum& s);

/// l-generators p_{2m+1} - alpha(lam) p_gen, even elements p_{2k} - lam^k
/// and quadrics f_jk = p_j p_k - sum_l C^l_jk p_l for j <= k <= up_to.
std::vector<CurveRecord> ideal_generators(const SolvedStratum& s, int up_to);

/// Res_z(p_a(z) - X, p_b(z) - Y) renamed to p_a, p_b. Only for the
/// polynomial strata Sigma_{4q+-1}. `at` optionally specializes H.
CurveRecord implicitize_plane_curve(const SolvedStratum& s, int a, int b, const std::map<VarId, Rational>& at = {});

/// p_{2n+1}^2 - alpha(lam)^2 f(lam) on Sigma_0 (f = lam + 2 H[1,1]) and
/// Sigma_2 (f the C6 cubic); n <= 1 on Sigma_2 gives C6 itself.
CurveRecord singular_family(const SolvedStratum& s, int n);

struct IdentityCheck {
    bool ok = true;
    /// Lowest exponent examined.
    int checked_floor = 0;
    std::string detail;
};

/// Substitutes the stratum's series (specialized by `at` when given) into
/// the record and checks every determined coefficient vanishes.
IdentityCheck verify_curve_identity(const CurveRecord& record, const SolvedStratum& s,
                                    const std::map<VarId, Rational>& at = {});

/// Points of the Sigma_3 rational family (H[3,-2], H[3,0], H[4,-2], H[4,0]) = (0, t^3, t^2, t^4).
std::map<VarId, Rational> sigma3_family_point(const Rational& t);

}  // namespace strata
