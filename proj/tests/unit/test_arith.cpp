#include <doctest.h>

#include "strata/groebner.hpp"
#include "strata/resultant.hpp"
#include "strata/univariate.hpp"
#include "support.hpp"

using namespace strata;
using strata::test::random_nonzero;
using strata::test::random_poly;
using strata::test::random_rational;
using strata::test::random_univariate;
using strata::test::var_pow;

namespace {

const VarId z = VarId::z();
const VarId t = VarId::t();
const VarId lam = VarId::lambda();

Rational determinant(std::vector<std::vector<Rational>> a) {
    std::size_t n = a.size();
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c] == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap(a[p], a[c]);
            det = -det;
        }
        det *= a[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            Rational f = a[r][c] / a[c][c];
            if (f == 0) continue;
            for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
        }
    }
    return det;
}

// Sylvester matrix of two univariate rational polynomials.
Rational sylvester_resultant(const UPoly& f, const UPoly& g) {
    int m = f.degree();
    int n = g.degree();
    std::size_t size = static_cast<std::size_t>(m + n);
    std::vector<std::vector<Rational>> s(size, std::vector<Rational>(size, Rational(0)));
    for (int r = 0; r < n; ++r) {
        for (int i = 0; i <= m; ++i) s[r][r + (m - i)] = f.coeffs()[i];
    }
    for (int r = 0; r < m; ++r) {
        for (int i = 0; i <= n; ++i) s[n + r][r + (n - i)] = g.coeffs()[i];
    }
    return determinant(s);
}

std::map<VarId, Rational> point(std::mt19937_64& rng, const std::vector<VarId>& vars) {
    std::map<VarId, Rational> at;
    for (VarId v : vars) at[v] = random_rational(rng, 7, 3);
    return at;
}

}  // namespace

TEST_CASE("polynomial ring axioms on random instances") {
    std::mt19937_64 rng(11);
    std::vector<VarId> vars = {z, lam, VarId::H(1, 1), VarId::H(3, -1)};
    for (int i = 0; i < 1000; ++i) {
        Poly a = random_poly(rng, vars);
        Poly b = random_poly(rng, vars);
        Poly c = random_poly(rng, vars);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - a).is_zero());
        CHECK(a * Poly(1L) == a);
        // Evaluation is a ring homomorphism; checks the product against
        // plain rational arithmetic.
        auto at = point(rng, vars);
        CHECK(specialize(a * b - c, at).constant_term() ==
              specialize(a, at).constant_term() * specialize(b, at).constant_term() -
                  specialize(c, at).constant_term());
    }
}

TEST_CASE("parse and print round trip") {
    std::mt19937_64 rng(12);
    std::vector<VarId> vars = {z, lam, VarId::p(3), VarId::H(3, -2), VarId::H(10, 4), VarId::X(), VarId::Y()};
    for (int i = 0; i < 300; ++i) {
        Poly a = random_poly(rng, vars, 5, 3);
        CHECK(parse_poly(a.str()) == a);
    }
    CHECK(parse_poly("0").is_zero());
    CHECK(parse_poly("-3/4*H[3,-1]^2*lam + 1").str() == "-3/4*H[3,-1]^2*lam + 1");
    CHECK_THROWS_AS(parse_poly("H[3,"), ParseError);
}

TEST_CASE("normalized form is primitive with positive leading coefficient") {
    Poly f = parse_poly("-4/3*lam^2 + 2*lam - 6");
    CHECK(f.normalized() == parse_poly("2*lam^2 - 3*lam + 9"));
    CHECK(equal_up_to_scale(f, f.normalized()));
    CHECK_FALSE(equal_up_to_scale(f, parse_poly("lam^2")));
}

TEST_CASE("exact division inverts multiplication") {
    std::mt19937_64 rng(13);
    std::vector<VarId> vars = {z, VarId::H(1, 1), VarId::H(3, 1)};
    for (int i = 0; i < 200; ++i) {
        Poly a = random_poly(rng, vars);
        Poly b = random_poly(rng, vars);
        if (b.is_zero()) continue;
        CHECK(exact_divide(a * b, b) == a);
    }
    CHECK_FALSE(try_exact_divide(parse_poly("lam^2 + 1"), parse_poly("lam + 1")).has_value());
}

TEST_CASE("resultant agrees with the Sylvester determinant") {
    std::mt19937_64 rng(14);
    for (int i = 0; i < 150; ++i) {
        std::uniform_int_distribution<int> deg(1, 5);
        Poly f = random_univariate(rng, z, deg(rng));
        Poly g = random_univariate(rng, z, deg(rng));
        Poly r = resultant_eliminate(f, g, z);
        REQUIRE(r.variables().empty());
        CHECK(r.constant_term() == sylvester_resultant(UPoly::from_poly(f, z), UPoly::from_poly(g, z)));
    }
}

TEST_CASE("parametric resultant specializes to the Sylvester determinant") {
    std::mt19937_64 rng(15);
    std::vector<VarId> coeff_vars = {t};
    for (int i = 0; i < 60; ++i) {
        std::uniform_int_distribution<int> deg(1, 4);
        int df = deg(rng);
        int dg = deg(rng);
        // Leading coefficients constant so specialization keeps degrees.
        Poly f = var_pow(z, df).scaled(random_nonzero(rng));
        Poly g = var_pow(z, dg).scaled(random_nonzero(rng));
        for (int e = 0; e < df; ++e) f += var_pow(z, e) * random_poly(rng, coeff_vars, 2, 2);
        for (int e = 0; e < dg; ++e) g += var_pow(z, e) * random_poly(rng, coeff_vars, 2, 2);
        Poly r = resultant_eliminate(f, g, z);
        for (int k = 0; k < 3; ++k) {
            std::map<VarId, Rational> at{{t, random_rational(rng)}};
            Rational expected =
                sylvester_resultant(UPoly::from_poly(specialize(f, at), z), UPoly::from_poly(specialize(g, at), z));
            CHECK(specialize(r, at).constant_term() == expected);
        }
    }
}

TEST_CASE("resultant of a parameterization vanishes on the curve") {
    // z -> (z^2, z^3) gives the cusp Y^2 - X^3.
    Poly r = resultant_eliminate(parse_poly("z^2 - X"), parse_poly("z^3 - Y"), z);
    CHECK(equal_up_to_scale(r, parse_poly("Y^2 - X^3")));
}

TEST_CASE("squarefree decomposition multiplies back") {
    std::mt19937_64 rng(16);
    for (int i = 0; i < 100; ++i) {
        Poly f(random_nonzero(rng));
        std::uniform_int_distribution<int> nf(1, 3);
        std::uniform_int_distribution<int> mult(1, 3);
        int count = nf(rng);
        for (int k = 0; k < count; ++k) f *= random_univariate(rng, lam, 1 + k % 2).pow(static_cast<unsigned>(mult(rng)));
        auto parts = squarefree_decompose(f, lam);
        Poly back(1L);
        for (const auto& p : parts) {
            back *= p.factor.pow(static_cast<unsigned>(p.multiplicity));
            UPoly u = UPoly::from_poly(p.factor, lam);
            CHECK(gcd(u, u.derivative()).degree() == 0);
        }
        CHECK(equal_up_to_scale(back, f));
        for (std::size_t a = 0; a < parts.size(); ++a) {
            for (std::size_t b = a + 1; b < parts.size(); ++b) {
                CHECK(gcd(UPoly::from_poly(parts[a].factor, lam), UPoly::from_poly(parts[b].factor, lam)).degree() == 0);
            }
        }
    }
}

TEST_CASE("Groebner basis on small known ideals") {
    SUBCASE("twisted points") {
        // <z^2 - lam, z^3 - z> cuts out z in {0, 1, -1}.
        auto gb = GroebnerBasis::compute({parse_poly("z^2 - lam"), parse_poly("z^3 - z")});
        CHECK_FALSE(gb.is_unit());
        CHECK(gb.contains(parse_poly("z*lam - z")));
        CHECK(gb.contains(parse_poly("lam^2 - lam")));
        CHECK(gb.contains(parse_poly("z^2 - lam") * parse_poly("lam + 7") + parse_poly("z^3 - z") * parse_poly("z")));
        CHECK_FALSE(gb.contains(parse_poly("z - 1")));
        CHECK_FALSE(gb.contains(parse_poly("lam")));
    }
    SUBCASE("unit ideal") {
        auto gb = GroebnerBasis::compute({parse_poly("z"), parse_poly("z - 1")});
        CHECK(gb.is_unit());
    }
    SUBCASE("radical membership") {
        auto gb = GroebnerBasis::compute({parse_poly("H[3,1]^3"), parse_poly("H[3,3]^2 - H[3,1]")});
        CHECK(gb.radical_power(parse_poly("H[3,1]"), 4) == 3u);
        CHECK(gb.radical_power(parse_poly("H[3,3]"), 6) == 6u);
        CHECK_FALSE(gb.radical_power(parse_poly("H[3,3]"), 4).has_value());
    }
    SUBCASE("membership agrees with random combinations") {
        std::mt19937_64 rng(17);
        std::vector<VarId> vars = {VarId::H(3, -2), VarId::H(3, 0), VarId::H(4, -2)};
        std::vector<Poly> gens = {parse_poly("H[3,0]^2 - H[3,-2]*H[4,-2]"), parse_poly("H[4,-2]^2 - H[3,0] + 1")};
        auto gb = GroebnerBasis::compute(gens);
        for (int i = 0; i < 40; ++i) {
            Poly f = random_poly(rng, vars, 3, 2) * gens[0] + random_poly(rng, vars, 3, 2) * gens[1];
            CHECK(gb.contains(f));
        }
        CHECK_FALSE(gb.contains(parse_poly("H[3,-2]")));
    }
    SUBCASE("budget") {
        CHECK_THROWS_AS(GroebnerBasis::compute({parse_poly("z^5 - lam^3 + H[1,1]"), parse_poly("z^4*lam - H[1,1]^2")},
                                               {}, 10),
                        GroebnerBudgetExceeded);
    }
}
