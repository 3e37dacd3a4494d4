#pragma once

#include <random>
#include <vector>

#include "strata/poly.hpp"

namespace strata::test {

inline Rational random_rational(std::mt19937_64& rng, int num = 9, int den = 4) {
    std::uniform_int_distribution<int> n(-num, num);
    std::uniform_int_distribution<int> d(1, den);
    Rational q(n(rng), d(rng));
    q.canonicalize();
    return q;
}

inline Rational random_nonzero(std::mt19937_64& rng, int num = 9, int den = 4) {
    Rational q;
    do {
        q = random_rational(rng, num, den);
    } while (q == 0);
    return q;
}

inline Poly var_pow(VarId v, int k) { return k == 0 ? Poly(1L) : Poly(v, static_cast<unsigned>(k)); }

/// Sparse random polynomial in `vars` with at most `terms` terms.
inline Poly random_poly(std::mt19937_64& rng, const std::vector<VarId>& vars, int terms = 4, int max_exp = 2) {
    std::uniform_int_distribution<int> e(0, max_exp);
    std::uniform_int_distribution<int> count(0, terms);
    Poly f;
    int n = count(rng);
    for (int i = 0; i < n; ++i) {
        Poly m(random_rational(rng));
        for (VarId v : vars) m *= var_pow(v, e(rng));
        f += m;
    }
    return f;
}

/// Random univariate polynomial of exact degree `deg` in v.
inline Poly random_univariate(std::mt19937_64& rng, VarId v, int deg) {
    Poly f = var_pow(v, deg).scaled(random_nonzero(rng));
    for (int i = 0; i < deg; ++i) f += var_pow(v, i).scaled(random_rational(rng));
    return f;
}

}  // namespace strata::test
