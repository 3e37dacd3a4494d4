#include "strata/genus.hpp"

#include <numeric>

#include "strata/univariate.hpp"

namespace strata {

namespace {

// Splits p^2 - f(lam) (up to scale); returns f.
Poly hyperelliptic_rhs(const CurveRecord& record, VarId& pvar) {
    std::optional<VarId> found;
    for (VarId v : record.poly.variables()) {
        if (v.kind == VarKind::P && record.poly.degree_in(v) == 2) {
            if (found) throw Error("record " + record.label + " has more than one squared p variable");
            found = v;
        }
    }
    if (!found) throw Error("record " + record.label + " is not of the form p^2 - f(lam)");
    pvar = *found;
    auto cs = record.poly.coefficients_in(pvar);
    if (!cs[1].is_zero() || !cs[2].is_constant()) {
        throw Error("record " + record.label + " is not of the form c*p^2 - f(lam)");
    }
    return cs[0].scaled(-1 / cs[2].constant_value());
}

Rational random_rational(std::mt19937_64& rng, int num, int den) {
    std::uniform_int_distribution<int> n(-num, num);
    std::uniform_int_distribution<int> d(1, den);
    return Rational(n(rng), d(rng));
}

}  // namespace

GenusCertificate hyperelliptic_genus(const CurveRecord& record, const std::map<VarId, Rational>& at) {
    VarId pvar;
    Poly f = hyperelliptic_rhs(record, pvar);
    const VarId lam = VarId::lambda();
    Poly fs = specialize(f, at);
    for (VarId v : fs.variables()) {
        if (v != lam) throw Error("specialization leaves " + v.name() + " symbolic in " + record.label);
    }
    if (fs.is_zero() || fs.degree_in(lam) != f.degree_in(lam)) {
        throw DegenerateSpecialization("degenerate specialization: deg f drops from " +
                                       std::to_string(f.degree_in(lam)) + " in " + record.label);
    }
    auto factors = squarefree_decompose(fs, lam);
    int odd_degree = 0;
    bool squared = false;
    nlohmann::json fac = nlohmann::json::array();
    for (const auto& sf : factors) {
        int d = static_cast<int>(sf.factor.degree_in(lam));
        if (sf.multiplicity % 2 == 1) odd_degree += d;
        if (sf.multiplicity >= 2) squared = true;
        fac.push_back({{"factor", sf.factor.str()}, {"multiplicity", sf.multiplicity}});
    }
    if (odd_degree == 0) throw DegenerateSpecialization("f is a perfect square; the curve is reducible");
    UPoly uf = UPoly::from_poly(fs, lam);
    GenusCertificate cert;
    cert.genus = (odd_degree - 1) / 2;
    cert.method = squared ? "squarefree-part-normalization" : "squarefree-hyperelliptic";
    nlohmann::json pt = nlohmann::json::object();
    for (const auto& [v, q] : at) pt[v.name()] = to_string(q);
    cert.evidence = {{"specialization", pt},
                     {"f", fs.str()},
                     {"degree", fs.degree_in(lam)},
                     {"gcd_f_df", gcd(uf, uf.derivative()).to_poly(lam).str()},
                     {"squarefree_factors", fac},
                     {"odd_part_degree", odd_degree}};
    return cert;
}

std::map<VarId, Rational> admissible_specialization(const CurveRecord& record, std::mt19937_64& rng, bool squarefree,
                                                    int attempts) {
    VarId pvar;
    Poly f = hyperelliptic_rhs(record, pvar);
    const VarId lam = VarId::lambda();
    for (int i = 0; i < attempts; ++i) {
        std::map<VarId, Rational> at;
        for (VarId v : f.variables()) {
            if (v.is_param()) at.emplace(v, random_rational(rng, 5, 3));
        }
        Poly fs = specialize(f, at);
        if (fs.is_zero() || fs.degree_in(lam) != f.degree_in(lam)) continue;
        if (squarefree) {
            UPoly uf = UPoly::from_poly(fs, lam);
            if (gcd(uf, uf.derivative()).degree() > 0) continue;
        }
        return at;
    }
    throw DegenerateSpecialization("no admissible specialization found for " + record.label);
}

GenusCertificate parameterization_injectivity(const SolvedStratum& s, int a, int b, int samples,
                                              const std::map<VarId, Rational>& at, std::uint64_t seed) {
    const VarId z = VarId::z();
    Poly pa = polynomial_element(s, a, at);
    Poly pb = polynomial_element(s, b, at);
    for (const Poly* q : {&pa, &pb}) {
        for (VarId v : q->variables()) {
            if (v != z) throw Error("parameterization check needs every H specialized; " + v.name() + " is free");
        }
    }
    UPoly ua = UPoly::from_poly(pa, z);
    UPoly ub = UPoly::from_poly(pb, z);
    std::mt19937_64 rng(seed);
    UPoly da = ua.derivative();
    UPoly db = ub.derivative();
    int fibre_excess = 0;
    int collisions = 0;
    int singular = 0;
    for (int i = 0; i < samples; ++i) {
        Rational z1 = random_rational(rng, 50, 7);
        if (da.eval(z1) == 0 && db.eval(z1) == 0) {
            // Cusp of the image: the fibre is legitimately nonreduced there.
            ++singular;
            continue;
        }
        UPoly fa = ua - UPoly({ua.eval(z1)});
        UPoly fb = ub - UPoly({ub.eval(z1)});
        if (gcd(fa, fb).degree() > 1) ++fibre_excess;
        Rational z2 = random_rational(rng, 50, 7);
        if (z1 != z2 && ua.eval(z1) == ua.eval(z2) && ub.eval(z1) == ub.eval(z2)) ++collisions;
    }
    GenusCertificate cert;
    cert.genus = 0;
    cert.method = "polynomial-parameterization";
    nlohmann::json pt = nlohmann::json::object();
    for (const auto& [v, q] : at) pt[v.name()] = to_string(q);
    cert.evidence = {{"orders", {a, b}},
                     {"gcd_orders", std::gcd(a, b)},
                     {"samples", samples},
                     {"fibre_excess", fibre_excess},
                     {"pair_collisions", collisions},
                     {"singular_samples", singular},
                     {"specialization", pt},
                     {"kind", "evidence, not proof"}};
    return cert;
}

}  // namespace strata
