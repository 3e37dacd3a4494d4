#pragma once

#include <functional>
#include <map>
#include <vector>

#include <json.hpp>

#include "strata/stratum.hpp"

namespace strata {

class DepthError : public Error {
public:
    DepthError(const std::string& what, int required) : Error(what), required_depth(required) {}
    int required_depth;
};

class InconsistentConstraints : public Error {
public:
    using Error::Error;
};

/// Outcome of expanding a series against basis elements.
struct ReductionResult {
    /// l -> C^l
    std::map<int, Poly> constants;
    /// exponent -> coefficient no reducer could absorb
    std::map<int, Poly> residual;
    int top = 0;
    /// Coefficients below this exponent were unknown and not examined.
    int reliable_floor = 0;
};

/// Greedy leading-term elimination from the top exponent down to the
/// series floor using the given reducers (order -> series with leading
/// coefficient 1 at that order).
ReductionResult reduce_against(const LaurentSeries& s, const std::map<int, const LaurentSeries*>& reducers);

ReductionResult reduce_product(const BasisFamily& basis, int j, int k);
/// z^2 * p_j reduced against the basis.
ReductionResult reduce_shift(const BasisFamily& basis, int j);

/// Which parameters elimination keeps as coordinates.
using ParameterFilter = std::function<bool(VarId)>;

/// The natural coordinates of W_m: Sigma_0 {H[1,1]}, Sigma_1 {H[1,0], H[1,1]},
/// Sigma_2n {H[2n+1,k] : k odd, 1-2n <= k <= 2n+1}, Sigma_3
/// {H[3,-2], H[3,0], H[4,-2], H[4,0]}, Sigma_{4q+1} the shape coefficients
/// of p_{2q+1}, Sigma_{4q-1} (q >= 2) those of p_{2q+1} plus H[4q,2-4q].
ParameterFilter natural_parameters(int m);

struct ConstraintSet {
    int stratum = 0;
    /// Primitive, sign-normalized, sorted, deduplicated.
    std::vector<Poly> obstructions;
    std::map<VarId, Poly> solved;
    std::vector<VarId> independents;
    /// Parameters neither solved nor chosen as coordinates (typically the
    /// deepest tail entries that no product within the window reaches).
    std::vector<VarId> undetermined;
    std::vector<Poly> unresolved;
    /// Reduced generators used for membership tests against `unresolved`.
    std::vector<Poly> ideal_basis;
    ParameterFilter keep;

    static int weight_of(VarId v) { return v.weight(); }

    /// Substitutes `solved`, then reduces modulo the unresolved ideal.
    Poly reduce(const Poly& f) const;
    Poly apply_solved(const Poly& f) const;
    LaurentSeries apply_solved(const LaurentSeries& s) const;

    nlohmann::json to_json() const;
};

/// Weight of a weight-homogeneous polynomial in the H parameters;
/// throws if f is not homogeneous.
int homogeneous_weight(const Poly& f);

ConstraintSet derive_constraint_set(const BasisFamily& basis, int max_index);
ConstraintSet eliminate_by_weight(ConstraintSet cs);
/// Runs elimination with an explicit coordinate choice.
ConstraintSet eliminate_by_weight(ConstraintSet cs, ParameterFilter keep);

/// Basis with `solved` substituted into every element.
BasisFamily solved_basis(const BasisFamily& basis, const ConstraintSet& cs);

/// derive + eliminate in one call.
ConstraintSet derive_and_eliminate(const BasisFamily& basis, int max_index);

/// Smallest product bound that reaches every generator of Sigma_m
/// (the hyperelliptic generator p_{m+1} of Sigma_{2n} included).
int default_max_index(int m);

/// A derived stratum: the symbolic family, its constraints and the family
/// with `solved` substituted.
struct SolvedStratum {
    BasisFamily basis;
    ConstraintSet cs;
    BasisFamily solved;

    /// True when v is a parameter the derivation could not pin down.
    bool is_undetermined(VarId v) const;
    /// True when f mentions no undetermined parameter.
    bool determined(const Poly& f) const;
};

SolvedStratum derive_stratum(int m, int depth = kDefaultDepth, int max_index = -1, int max_order = -1);

}  // namespace strata
