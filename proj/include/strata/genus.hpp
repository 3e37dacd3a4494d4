#pragma once

#include <cstdint>
#include <map>
#include <random>

#include "strata/curves.hpp"

namespace strata {

class DegenerateSpecialization : public Error {
public:
    using Error::Error;
};

/// Genus of p^2 = f(lam) after specializing the parameters: the genus of
/// p^2 = (odd-multiplicity part of f), i.e. the normalization genus.
/// Throws DegenerateSpecialization when deg f drops.
GenusCertificate hyperelliptic_genus(const CurveRecord& record, const std::map<VarId, Rational>& at);

/// Seeded search for a point where deg f is preserved and, when
/// `squarefree` is set, f is squarefree.
std::map<VarId, Rational> admissible_specialization(const CurveRecord& record, std::mt19937_64& rng,
                                                    bool squarefree = true, int attempts = 200);

/// Genus-0 evidence for z -> (p_a(z), p_b(z)): for each sampled z1 the fibre
/// gcd(p_a(z) - p_a(z1), p_b(z) - p_b(z1)) must be z - z1, and random
/// pairs must not collide. Samples at cusps (both derivatives zero) are
/// counted separately. Evidence, not proof.
GenusCertificate parameterization_injectivity(const SolvedStratum& s, int a, int b, int samples,
                                              const std::map<VarId, Rational>& at = {}, std::uint64_t seed = 1);

}  // namespace strata
