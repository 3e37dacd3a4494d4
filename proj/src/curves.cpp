#include "strata/curves.hpp"

#include <algorithm>
#include <set>

#include "strata/resultant.hpp"

namespace strata {

std::string to_string(CurveKind kind) {
    switch (kind) {
        case CurveKind::Veronese: return "veronese";
        case CurveKind::Hyperelliptic: return "hyperelliptic";
        case CurveKind::Plane: return "plane";
        case CurveKind::SingularFamily: return "singular-family";
        case CurveKind::IdealGenerator: return "ideal-generator";
    }
    return "?";
}

CurveKind parse_curve_kind(std::string_view text) {
    if (text == "veronese") return CurveKind::Veronese;
    if (text == "hyperelliptic") return CurveKind::Hyperelliptic;
    if (text == "plane") return CurveKind::Plane;
    if (text == "singular" || text == "singular-family") return CurveKind::SingularFamily;
    if (text == "ideal" || text == "ideal-generator") return CurveKind::IdealGenerator;
    throw ParseError("unknown curve kind '" + std::string(text) + "'");
}

nlohmann::json GenusCertificate::to_json() const {
    return {{"genus", genus}, {"method", method}, {"evidence", evidence}};
}

nlohmann::json CurveRecord::to_json() const {
    nlohmann::json ps = nlohmann::json::array();
    for (VarId v : params) ps.push_back(v.name());
    return {{"stratum", stratum},
            {"kind", to_string(kind)},
            {"label", label},
            {"poly", poly.str()},
            {"params", ps},
            {"genus", genus ? genus->to_json() : nlohmann::json(nullptr)},
            {"extra", extra}};
}

CurveRecord make_record(int stratum, CurveKind kind, std::string label, const Poly& poly) {
    CurveRecord r;
    r.stratum = stratum;
    r.kind = kind;
    r.label = std::move(label);
    r.poly = poly.normalized();
    for (VarId v : r.poly.variables()) {
        if (v.is_param()) r.params.push_back(v);
    }
    return r;
}

// ---------------------------------------------------------------- series

LaurentSeries lambda_series(int floor) { return LaurentSeries::monomial(2, Poly(1L), floor); }

LaurentSeries series_power(const LaurentSeries& f, unsigned k) {
    LaurentSeries r = LaurentSeries::one(f.floor() - std::max(f.top(), 0));
    for (unsigned i = 0; i < k; ++i) r = series_multiply(r, f);
    return r;
}

LaurentSeries specialize_series(const LaurentSeries& s, const std::map<VarId, Rational>& at) {
    if (at.empty()) return s;
    return s.map_coeffs([&](const Poly& c) { return specialize(c, at); });
}

LaurentSeries evaluate_on_series(const Poly& f, const std::map<VarId, LaurentSeries>& values) {
    int floor = 0;
    for (const auto& [v, s] : values) floor = std::min(floor, s.floor());
    std::map<std::pair<VarId, unsigned>, LaurentSeries> powers;
    auto power = [&](VarId v, unsigned e) -> const LaurentSeries& {
        auto key = std::make_pair(v, e);
        auto it = powers.find(key);
        if (it != powers.end()) return it->second;
        return powers.emplace(key, series_power(values.at(v), e)).first->second;
    };
    std::optional<LaurentSeries> sum;
    for (const auto& t : f.terms()) {
        Monomial rest;
        std::optional<LaurentSeries> part;
        for (const auto& [v, e] : t.mono.entries()) {
            if (values.count(v)) {
                const auto& pw = power(v, e);
                part = part ? series_multiply(*part, pw) : pw;
            } else {
                rest = rest * Monomial(v, e);
            }
        }
        LaurentSeries contrib = part ? *part : LaurentSeries::one(floor);
        contrib = contrib.scaled(Poly(rest, t.coeff));
        sum = sum ? *sum + contrib : contrib;
    }
    return sum ? *sum : LaurentSeries(0, floor);
}

namespace {

Poly reduce_with(const SolvedStratum* s, const Poly& c) { return s ? s->cs.reduce(c) : c; }

bool determined_with(const SolvedStratum* s, const Poly& c) { return !s || s->determined(c); }

// Checks coefficients below z^0 down to the floor or the first coefficient
// touching an undetermined parameter.
int check_below_zero(const LaurentSeries& rem, const SolvedStratum* s, std::map<int, Poly>& residual) {
    int checked = 0;
    for (int e = std::min(-1, rem.top()); e >= rem.floor(); --e) {
        const Poly& raw = rem.coeff(e);
        if (!determined_with(s, raw)) break;
        Poly c = reduce_with(s, raw);
        if (!c.is_zero()) residual.emplace(e, std::move(c));
        checked = e;
    }
    return checked;
}

}  // namespace

Poly polynomial_in_z(const LaurentSeries& s) {
    Poly out;
    for (int e = s.top(); e >= s.floor(); --e) {
        const Poly& c = s.coeff(e);
        if (c.is_zero()) continue;
        if (e < 0) throw Error("series is not a polynomial in z: coefficient of z^" + std::to_string(e) + " is " + c.str());
        out += c * Poly(VarId::z(), static_cast<unsigned>(e));
    }
    return out;
}

PowerExpansion expand_in_powers(const LaurentSeries& target, const LaurentSeries& q, VarId name,
                                const SolvedStratum* s) {
    if (q.top() != 1 || q.coeff(1) != Poly(1L)) throw Error("expand_in_powers: q must be z + lower terms");
    PowerExpansion out;
    std::vector<LaurentSeries> pw{series_power(q, 0)};
    for (int e = 1; e <= std::max(target.top(), 0); ++e) pw.push_back(series_multiply(pw.back(), q));
    LaurentSeries rem = target;
    for (int e = target.top(); e >= 0; --e) {
        Poly c = reduce_with(s, rem.coeff(e));
        if (c.is_zero()) continue;
        rem = rem - pw[static_cast<std::size_t>(e)].scaled(c);
        out.poly += c * Poly(name, static_cast<unsigned>(e));
    }
    out.checked_floor = check_below_zero(rem, s, out.residual);
    return out;
}

LambdaDecomposition decompose_over_lambda(const LaurentSeries& target, const LaurentSeries& gen, int gen_order,
                                          const SolvedStratum* s) {
    LambdaDecomposition out;
    const VarId lam = VarId::lambda();
    LaurentSeries rem = target;
    for (int e = target.top(); e >= 0; --e) {
        Poly c = reduce_with(s, rem.coeff(e));
        if (c.is_zero()) continue;
        if (e % 2 == 0) {
            rem = rem - LaurentSeries::monomial(e, c, rem.floor());
            out.b += c * Poly(lam, static_cast<unsigned>(e / 2));
        } else if (e >= gen_order) {
            int k = (e - gen_order) / 2;
            rem = rem - shift_even(gen, k).scaled(c);
            out.a += c * Poly(lam, static_cast<unsigned>(k));
        } else {
            out.residual.emplace(e, c);
            rem.set(e, Poly());
        }
    }
    out.checked_floor = check_below_zero(rem, s, out.residual);
    return out;
}

// ---------------------------------------------------------------- curves

namespace {

Poly p(int j) { return Poly(VarId::p(j)); }
Poly lam() { return Poly(VarId::lambda()); }

std::string residual_text(const std::map<int, Poly>& residual) {
    std::string s;
    for (const auto& [e, c] : residual) s += " z^" + std::to_string(e) + ": " + c.str() + ";";
    return s;
}

// f(lam) with p_{2n+1}^2 = f(lam) on the solved family.
struct SquareRhs {
    Poly f;
    std::map<int, Poly> u;
    int checked_floor = 0;
};

SquareRhs square_rhs(int n, const SolvedStratum& s) {
    int j = 2 * n + 1;
    const auto& pj = s.solved.element(j);
    LaurentSeries sq = series_multiply(pj, pj);
    SquareRhs out;
    for (int e = sq.top(); e >= 0; --e) {
        Poly c = s.cs.reduce(sq.coeff(e));
        if (c.is_zero()) continue;
        if (e % 2 != 0) {
            throw InconsistentConstraints("p" + std::to_string(j) + "^2 has odd exponent z^" + std::to_string(e) +
                                          " with coefficient " + c.str());
        }
        out.u.emplace(e / 2, c);
        out.f += c * Poly(VarId::lambda(), static_cast<unsigned>(e / 2));
    }
    std::map<int, Poly> residual;
    out.checked_floor = check_below_zero(sq, &s, residual);
    if (!residual.empty()) {
        throw InconsistentConstraints("p" + std::to_string(j) + "^2 leaves" + residual_text(residual));
    }
    return out;
}

void require_stratum(const SolvedStratum& s, std::initializer_list<int> allowed, const char* what) {
    int m = s.basis.spec.m;
    if (std::find(allowed.begin(), allowed.end(), m) == allowed.end()) {
        throw Error(std::string(what) + " is not defined on Sigma_" + std::to_string(m));
    }
}

bool is_unit_element(const LaurentSeries& s) {
    if (s.top() != 0) return false;
    for (int e = s.top(); e >= s.floor(); --e) {
        if (s.coeff(e) != (e == 0 ? Poly(1L) : Poly())) return false;
    }
    return true;
}

}  // namespace

std::vector<CurveRecord> veronese_tower(const SolvedStratum& s, int count) {
    require_stratum(s, {0}, "veronese_tower");
    if (count < 1) throw Error("veronese_tower: count must be >= 1");
    const auto& p1 = s.solved.element(1);
    std::vector<CurveRecord> out;
    auto lam_exp = expand_in_powers(lambda_series(p1.floor()), p1, VarId::p(1), &s);
    auto rec = make_record(0, CurveKind::Veronese, "lam", lam() - lam_exp.poly);
    rec.extra = {{"n", 0}, {"form", "lam = " + lam_exp.poly.str()}};
    out.push_back(std::move(rec));
    for (int n = 1; n <= count; ++n) {
        int j = 2 * n + 1;
        const auto& pj = s.solved.element(j);
        auto ex = expand_in_powers(pj, p1, VarId::p(1), &s);
        if (!ex.residual.empty()) {
            throw InconsistentConstraints("p" + std::to_string(j) + " is not a polynomial in p1:" +
                                          residual_text(ex.residual));
        }
        auto dec = decompose_over_lambda(pj, p1, 1, &s);
        // The printed product prod_s (lam - H[1,2(n-s)+1] / (2(n-s)+1)).
        Poly product(1L);
        for (int k = 1; k <= n; ++k) {
            int idx = 2 * (n - k) + 1;
            product *= lam() - s.cs.apply_solved(Poly(VarId::H(1, idx))).scaled(Rational(1, idx));
        }
        auto r = make_record(0, CurveKind::Veronese, "p" + std::to_string(j), p(j) - ex.poly);
        r.extra = {{"n", n},
                   {"form", "p" + std::to_string(j) + " = " + ex.poly.str()},
                   {"alpha", dec.a.str()},
                   {"alpha_printed_product", product.str()},
                   {"printed_product_agrees", product == dec.a},
                   {"checked_floor", ex.checked_floor}};
        out.push_back(std::move(r));
    }
    return out;
}

CurveRecord hyperelliptic_curve(int n, const SolvedStratum& s) {
    if (n < 0 || s.basis.spec.m != 2 * n) {
        throw Error("hyperelliptic_curve(" + std::to_string(n) + ") needs Sigma_" + std::to_string(2 * n) +
                    ", got Sigma_" + std::to_string(s.basis.spec.m));
    }
    int j = 2 * n + 1;
    auto rhs = square_rhs(n, s);
    auto rec = make_record(2 * n, CurveKind::Hyperelliptic, "C" + std::to_string(2 * j), p(j).pow(2) - rhs.f);
    nlohmann::json u = nlohmann::json::object();
    for (const auto& [k, c] : rhs.u) u[std::to_string(k)] = c.str();
    rec.extra = {{"n", n}, {"u", u}, {"rhs", rhs.f.str()}, {"checked_floor", rhs.checked_floor}};
    return rec;
}

std::vector<CurveRecord> ideal_generators(const SolvedStratum& s, int up_to) {
    const auto& spec = s.basis.spec;
    int m = spec.m;
    std::vector<CurveRecord> out;
    up_to = std::min(up_to, spec.max_order);
    if (m % 2 == 0) {
        int d = m + 1;
        out.push_back(hyperelliptic_curve(m / 2, s));
        out.back().kind = CurveKind::IdealGenerator;
        const auto& gen = s.solved.element(d);
        for (int j : spec.basis_indices) {
            if (j > up_to || j == d || j == 0) continue;
            auto dec = decompose_over_lambda(s.solved.element(j), gen, d, &s);
            if (!dec.residual.empty()) {
                throw InconsistentConstraints("p" + std::to_string(j) + " is not in C[lam] + C[lam]*p" +
                                              std::to_string(d) + ":" + residual_text(dec.residual));
            }
            auto r = make_record(m, CurveKind::IdealGenerator, "l_" + std::to_string(j),
                                 p(j) - dec.a * p(d) - dec.b);
            r.extra = {{"alpha", dec.a.str()}, {"constant_part", dec.b.str()}, {"checked_floor", dec.checked_floor}};
            out.push_back(std::move(r));
        }
    }
    bool unit = spec.is_basis_order(0) && is_unit_element(s.solved.element(0));
    for (std::size_t a = 0; a < spec.basis_indices.size(); ++a) {
        int j = spec.basis_indices[a];
        if (j > up_to) break;
        for (std::size_t b = a; b < spec.basis_indices.size(); ++b) {
            int k = spec.basis_indices[b];
            if (k > up_to || j + k > spec.max_order) break;
            auto red = reduce_product(s.solved, j, k);
            Poly f = p(j) * p(k);
            for (const auto& [l, c] : red.constants) {
                Poly cl = s.cs.reduce(c);
                f -= cl * ((l == 0 && unit) ? Poly(1L) : p(l));
            }
            if (unit) f = substitute(f, {{VarId::p(0), Poly(1L)}});
            if (f.is_zero()) continue;
            out.push_back(make_record(m, CurveKind::IdealGenerator,
                                      "f_" + std::to_string(j) + "," + std::to_string(k), f));
        }
    }
    return out;
}

Poly polynomial_element(const SolvedStratum& s, int j, const std::map<VarId, Rational>& at) {
    LaurentSeries e = s.solved.element(j);
    if (!at.empty()) e = specialize_series(e, at);
    LaurentSeries cleaned = e;
    for (int k = -1; k >= e.floor(); --k) {
        const Poly& c = e.coeff(k);
        if (c.is_zero()) continue;
        if (!s.determined(c)) {
            throw Error("p" + std::to_string(j) + " has an undetermined coefficient at z^" + std::to_string(k));
        }
        Poly r = at.empty() ? s.cs.reduce(c) : c;
        if (!r.is_zero()) {
            throw Error("p" + std::to_string(j) + " is not polynomial: z^" + std::to_string(k) + " carries " + r.str());
        }
        cleaned.set(k, Poly());
    }
    return polynomial_in_z(cleaned);
}

CurveRecord implicitize_plane_curve(const SolvedStratum& s, int a, int b, const std::map<VarId, Rational>& at) {
    int m = s.basis.spec.m;
    if (m < 3 || m % 2 == 0) {
        throw Error("plane curves need a polynomial stratum Sigma_{4q+-1}; Sigma_" + std::to_string(m) +
                    " is not one");
    }
    if (!s.basis.spec.is_basis_order(a) || !s.basis.spec.is_basis_order(b)) {
        throw Error("orders (" + std::to_string(a) + "," + std::to_string(b) + ") are not basis orders of Sigma_" +
                    std::to_string(m));
    }
    const VarId z = VarId::z();
    Poly f = polynomial_element(s, a, at) - Poly(VarId::X());
    Poly g = polynomial_element(s, b, at) - Poly(VarId::Y());
    Poly res = resultant_eliminate(f, g, z);
    res = rename(res, {{VarId::X(), VarId::p(a)}, {VarId::Y(), VarId::p(b)}});
    auto rec = make_record(m, CurveKind::Plane, "(" + std::to_string(a) + "," + std::to_string(b) + ")", res);
    nlohmann::json pt = nlohmann::json::object();
    for (const auto& [v, q] : at) pt[v.name()] = to_string(q);
    rec.extra = {{"orders", {a, b}}, {"specialization", pt}};
    return rec;
}

CurveRecord singular_family(const SolvedStratum& s, int n) {
    require_stratum(s, {0, 2}, "singular_family");
    int m = s.basis.spec.m;
    int d = m + 1;
    auto base = square_rhs(m / 2, s);
    int j = 2 * n + 1;
    if (j <= d) {
        auto rec = make_record(m, CurveKind::SingularFamily, "p" + std::to_string(d) + "^2", p(d).pow(2) - base.f);
        rec.extra = {{"n", n}, {"square_factor", "1"}, {"base", base.f.str()}};
        return rec;
    }
    auto dec = decompose_over_lambda(s.solved.element(j), s.solved.element(d), d, &s);
    if (!dec.residual.empty() || !dec.b.is_zero()) {
        throw InconsistentConstraints("p" + std::to_string(j) + " is not alpha(lam)*p" + std::to_string(d));
    }
    auto rec = make_record(m, CurveKind::SingularFamily, "p" + std::to_string(j) + "^2",
                           p(j).pow(2) - dec.a.pow(2) * base.f);
    rec.extra = {{"n", n}, {"square_factor", dec.a.str()}, {"base", base.f.str()}};
    return rec;
}

IdentityCheck verify_curve_identity(const CurveRecord& record, const SolvedStratum& s,
                                    const std::map<VarId, Rational>& at) {
    IdentityCheck out;
    std::map<VarId, LaurentSeries> values;
    int floor = 0;
    for (VarId v : record.poly.variables()) {
        if (v.kind == VarKind::P) {
            if (!s.solved.elements.count(v.j)) {
                out.ok = false;
                out.detail = "p" + std::to_string(v.j) + " is not an element of Sigma_" + std::to_string(s.basis.spec.m);
                return out;
            }
            values.emplace(v, specialize_series(s.solved.element(v.j), at));
            floor = std::min(floor, values.at(v).floor());
        } else if (!v.is_param() && v.kind != VarKind::Lambda) {
            out.ok = false;
            out.detail = "variable " + v.name() + " has no series meaning";
            return out;
        }
    }
    values.emplace(VarId::lambda(), lambda_series(floor));
    Poly f = at.empty() ? record.poly : specialize(record.poly, at);
    LaurentSeries ev = evaluate_on_series(f, values);
    out.checked_floor = ev.top();
    for (int e = ev.top(); e >= ev.floor(); --e) {
        const Poly& raw = ev.coeff(e);
        if (!s.determined(raw)) break;
        Poly c = s.cs.reduce(raw);
        if (!c.is_zero()) {
            out.ok = false;
            out.detail += "z^" + std::to_string(e) + ": " + c.str() + "; ";
        }
        out.checked_floor = e;
    }
    return out;
}

std::map<VarId, Rational> sigma3_family_point(const Rational& t) {
    return {{VarId::H(3, -2), Rational(0)},
            {VarId::H(3, 0), t * t * t},
            {VarId::H(4, -2), t * t},
            {VarId::H(4, 0), t * t * t * t}};
}

}  // namespace strata
