#include <doctest.h>

#include "strata/laurent.hpp"
#include "support.hpp"

using namespace strata;
using strata::test::random_rational;

namespace {

LaurentSeries random_series(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> top(-3, 7);
    std::uniform_int_distribution<int> len(0, 9);
    std::uniform_int_distribution<int> zero(0, 3);
    int t = top(rng);
    LaurentSeries s(t, t - len(rng));
    for (int e = s.floor(); e <= t; ++e) {
        if (zero(rng) != 0) s.set(e, Poly(random_rational(rng)));
    }
    return s;
}

}  // namespace

TEST_CASE("series_multiply matches brute-force convolution") {
    std::mt19937_64 rng(21);
    for (int i = 0; i < 500; ++i) {
        LaurentSeries f = random_series(rng);
        LaurentSeries g = random_series(rng);
        LaurentSeries h = series_multiply(f, g);
        CHECK(h.top() == f.top() + g.top());
        CHECK(h.floor() == std::max(f.floor() + g.top(), g.floor() + f.top()));
        // Every product of two known coefficients.
        std::map<int, Rational> conv;
        for (int a = f.floor(); a <= f.top(); ++a) {
            for (int b = g.floor(); b <= g.top(); ++b) {
                conv[a + b] += f.coeff(a).constant_term() * g.coeff(b).constant_term();
            }
        }
        for (int e = h.floor(); e <= h.top(); ++e) CHECK(h.coeff(e).constant_term() == conv[e]);
    }
}

TEST_CASE("series window arithmetic") {
    LaurentSeries f = LaurentSeries::monomial(2, Poly(1L), -4);
    CHECK(f.leading_exponent() == 2);
    CHECK(f.coeff(9).is_zero());
    CHECK_THROWS(f.coeff(-5));
    LaurentSeries g = shift_even(f, 1);
    CHECK(g.top() == 4);
    CHECK(g.floor() == -2);
    CHECK(g.coeff(4) == Poly(1L));
    CHECK(LaurentSeries::from_json(f.to_json()) == f);
    LaurentSeries s = LaurentSeries::monomial(1, parse_poly("H[1,1]"), -3);
    CHECK(series_substitute(s, {{VarId::H(1, 1), Poly(2L)}}).coeff(1) == Poly(2L));
}
