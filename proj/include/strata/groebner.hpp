#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "strata/poly.hpp"

namespace strata {

class GroebnerBudgetExceeded : public Error {
public:
    using Error::Error;
};

/// Reduced Groebner basis over Q in graded reverse lexicographic order
/// (Buchberger with the product and chain criteria). Used where lex
/// division against `unresolved` is not a decision procedure.
class GroebnerBasis {
public:
    /// `extra` lists variables that may appear in later normal_form calls
    /// without occurring in the generators. Throws GroebnerBudgetExceeded
    /// once the work count (terms touched times coefficient limbs) passes
    /// `max_work` (0 = unlimited); deterministic, unlike a wall-clock limit.
    static GroebnerBasis compute(const std::vector<Poly>& generators, const std::vector<VarId>& extra = {},
                                 std::size_t max_work = 0);

    const std::vector<Poly>& basis() const { return basis_; }
    bool is_unit() const;
    /// Remainder up to a nonzero rational factor.
    Poly normal_form(const Poly& f) const;
    bool contains(const Poly& f) const { return normal_form(f).is_zero(); }
    /// Smallest r <= max_power with f^r in the ideal.
    std::optional<unsigned> radical_power(const Poly& f, unsigned max_power) const;
    std::size_t pairs_processed() const { return pairs_; }
    std::size_t work() const { return work_; }

private:
    std::vector<Poly> basis_;
    std::vector<VarId> vars_;
    std::size_t pairs_ = 0;
    std::size_t work_ = 0;
};

}  // namespace strata
