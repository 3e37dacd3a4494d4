#pragma once

#include <map>
#include <vector>

#include <json.hpp>

#include "strata/laurent.hpp"

namespace strata {

inline constexpr int kDefaultDepth = 12;
inline constexpr int kDefaultMaxIndex = 8;
inline constexpr int kMaxStratum = 9;

class UnsupportedStratum : public Error {
public:
    using Error::Error;
};

/// Order data of the stratum Sigma_m of Gr^(2).
struct StratumSpec {
    int m = 0;
    int depth = kDefaultDepth;
    int max_order = 2 * kDefaultMaxIndex + 2;
    /// S_m intersected with [-m, max_order].
    std::vector<int> index_set;
    /// Orders of the closed-subset basis, up to max_order.
    std::vector<int> basis_indices;
    /// Nonnegative orders below the basis tail that carry no basis element.
    std::vector<int> gaps;
    /// Nonnegative exponents absent from S_m; these carry H[j,-e] terms.
    std::vector<int> shape_exponents;
    int codim = 0;

    bool in_index_set(int order) const;
    bool is_basis_order(int order) const;
    /// Smallest order from which every order is a basis order.
    int tail_start() const;
    int lowest_basis_order() const { return basis_indices.front(); }
};

StratumSpec make_stratum_spec(int m, int depth = kDefaultDepth, int max_order = 2 * kDefaultMaxIndex + 2);

/// Symbolic canonical basis: p_j = z^j + sum_{e in shape, e < j} H[j,-e] z^e
///                                     + sum_{k=1..depth} H[j,k] z^-k.
struct BasisFamily {
    StratumSpec spec;
    std::map<int, LaurentSeries> elements;

    const LaurentSeries& element(int j) const;
    /// Every H symbol occurring in the family.
    std::vector<VarId> parameters() const;
    nlohmann::json to_json() const;
};

/// Builds the symbolic basis of Sigma_m truncated at z^-depth with basis
/// orders up to max_order. Throws UnsupportedStratum for m outside [0, 9].
BasisFamily build_basis(int m, int depth = kDefaultDepth, int max_order = 2 * kDefaultMaxIndex + 2);

/// The basis series of one order with the given shape, exposed for
/// variants (the relaxed probe builds an ambient element this way).
LaurentSeries make_basis_series(int j, const std::vector<int>& shape_exponents, int depth);

}  // namespace strata
