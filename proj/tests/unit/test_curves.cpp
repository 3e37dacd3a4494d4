#include <doctest.h>

#include "strata/genus.hpp"
#include "strata/report.hpp"
#include "support.hpp"

using namespace strata;

namespace {

const SolvedStratum& stratum(int m) {
    static std::map<int, SolvedStratum> cache;
    auto it = cache.find(m);
    if (it == cache.end()) it = cache.emplace(m, derive_stratum(m)).first;
    return it->second;
}

}  // namespace

TEST_CASE("Veronese tower starts with the twisted cubic") {
    auto recs = veronese_tower(stratum(0), 2);
    REQUIRE(recs.size() == 3);
    CHECK(equal_up_to_scale(recs[0].poly, parse_poly("p1^2 - 2*H[1,1] - lam")));
    CHECK(equal_up_to_scale(recs[1].poly, parse_poly("p1^3 - 3*H[1,1]*p1 - p3")));
    CHECK(equal_up_to_scale(recs[2].poly, parse_poly("p1^5 - 5*H[1,1]*p1^3 + 15/2*H[1,1]^2*p1 - p5")));
    for (const auto& r : recs) CHECK(verify_curve_identity(r, stratum(0)).ok);
}

TEST_CASE("C6 identity and genus") {
    CurveRecord c6 = hyperelliptic_curve(1, stratum(2));
    IdentityCheck id = verify_curve_identity(c6, stratum(2));
    CHECK(id.ok);
    CHECK(id.checked_floor <= -6);
    std::map<VarId, Rational> at{{VarId::H(3, -1), Rational(0)}, {VarId::H(3, 1), Rational(0)},
                                 {VarId::H(3, 3), Rational(1, 2)}};
    GenusCertificate g = hyperelliptic_genus(c6, at);
    CHECK(g.genus == 1);
}

TEST_CASE("hyperelliptic genus is invariant over admissible specializations") {
    for (int n = 1; n <= 4; ++n) {
        CurveRecord r = hyperelliptic_curve(n, stratum(2 * n));
        for (std::uint64_t seed = 1; seed <= 5; ++seed) {
            std::mt19937_64 rng(seed);
            auto at = admissible_specialization(r, rng);
            CHECK_MESSAGE(hyperelliptic_genus(r, at).genus == n, "n=" << n << " seed=" << seed);
        }
    }
}

TEST_CASE("degree-dropping specialization is refused") {
    CurveRecord c6 = hyperelliptic_curve(1, stratum(2));
    // Leading lam^3 stays, so pick a record whose top coefficient can vanish:
    // a bare parameter multiple of lam.
    CurveRecord r = make_record(2, CurveKind::Hyperelliptic, "test", parse_poly("p3^2 - H[3,1]*lam^3 - lam"));
    CHECK_THROWS_AS(hyperelliptic_genus(r, {{VarId::H(3, 1), Rational(0)}}), DegenerateSpecialization);
    CHECK(c6.poly.degree_in(VarId::lambda()) == 3);
}

TEST_CASE("singular families use the normalization genus") {
    std::mt19937_64 rng(41);
    CurveRecord s0 = singular_family(stratum(0), 2);
    CHECK(hyperelliptic_genus(s0, admissible_specialization(s0, rng, false)).genus == 0);
    CurveRecord s2 = singular_family(stratum(2), 2);
    CHECK(hyperelliptic_genus(s2, admissible_specialization(s2, rng, false)).genus == 1);
    CHECK(verify_curve_identity(s2, stratum(2)).ok);
}

TEST_CASE("plane curves on Sigma_5") {
    CurveRecord r = implicitize_plane_curve(stratum(5), 3, 5);
    CHECK(r.poly.degree_in(VarId::p(3)) == 5);
    CHECK(r.poly.degree_in(VarId::p(5)) == 3);
    CHECK(verify_curve_identity(r, stratum(5)).ok);
    GenusCertificate g = parameterization_injectivity(stratum(5), 3, 5, 40,
                                                      {{VarId::H(3, -2), Rational(1)}, {VarId::H(3, 0), Rational(2)}});
    CHECK(g.genus == 0);
    CHECK(g.evidence["fibre_excess"] == 0);
}

TEST_CASE("Sigma_3 plane curve vanishes on the rational family") {
    for (int t = 1; t <= 3; ++t) {
        auto at = sigma3_family_point(Rational(t));
        CurveRecord r = implicitize_plane_curve(stratum(3), 3, 4, at);
        CHECK(verify_curve_identity(r, stratum(3), at).ok);
        CHECK(r.poly.degree_in(VarId::p(3)) == 4);
    }
}

TEST_CASE("golden text is canonical") {
    ConstraintSet empty;
    CHECK(golden_text(empty) == "[]\n");
    CurveRecord c6 = hyperelliptic_curve(1, stratum(2));
    CHECK(golden_text(c6) == c6.poly.normalized().str() + "\n");
}
