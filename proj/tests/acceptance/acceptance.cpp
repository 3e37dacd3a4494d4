// One line per acceptance criterion; exit status 1 if any criterion fails.
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "strata/cli.hpp"
#include "strata/genus.hpp"
#include "strata/relations.hpp"
#include "strata/report.hpp"

#ifndef STRATA_GOLDEN_DIR
#define STRATA_GOLDEN_DIR "tests/golden"
#endif

using namespace strata;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            if (!detail.empty()) detail += "; ";
            detail += what;
        }
    }
};

const std::filesystem::path kGolden = STRATA_GOLDEN_DIR;

const SolvedStratum& stratum(int m) {
    static std::map<int, SolvedStratum> cache;
    auto it = cache.find(m);
    if (it == cache.end()) it = cache.emplace(m, derive_stratum(m)).first;
    return it->second;
}

Poly golden_poly(const std::string& name) { return parse_poly(read_text_file(kGolden / name)); }

Outcome sigma3_constraints() {
    Outcome o;
    SolvedStratum s = derive_stratum(3);
    std::set<std::string> got;
    std::set<std::string> want;
    for (const auto& p : s.cs.unresolved) got.insert(p.normalized().str());
    for (const auto& p : nlin_s3_generators()) want.insert(p.normalized().str());
    o.require(s.cs.unresolved.size() == 2, std::to_string(s.cs.unresolved.size()) + " unresolved generators");
    o.require(got == want, "unresolved set differs from the quadratic pair");
    o.detail = o.ok ? "2 unresolved generators match" : o.detail;
    return o;
}

Outcome sigma5_table() {
    Outcome o;
    SolvedStratum s = derive_stratum(5);
    VerifyReport rep = verify_printed_relations(s);
    int rows = 0;
    for (const auto& v : rep.verdicts) {
        if (v.check.rfind("fH-S5", 0) != 0 && v.check.rfind("p-S5", 0) != 0) continue;
        ++rows;
        o.require(v.status == Status::Pass, v.check + " " + to_string(v.status));
    }
    o.require(rows >= 6, "too few rows");
    if (o.ok) o.detail = std::to_string(rows) + " rows pass";
    return o;
}

Outcome c6_curve() {
    Outcome o;
    const SolvedStratum& s = stratum(2);
    CurveRecord c6 = hyperelliptic_curve(1, s);
    o.require(golden_text(c6) == read_text_file(kGolden / "c6.txt"), "golden mismatch");
    IdentityCheck id = verify_curve_identity(c6, s);
    o.require(id.ok, "identity: " + id.detail);
    for (VarId v : c6.poly.variables()) {
        if (v.is_param()) o.require(!s.cs.solved.contains(v), v.name() + " is not independent");
    }
    if (o.ok) o.detail = "golden byte-identical; identity zero down to z^" + std::to_string(id.checked_floor);
    return o;
}

Outcome plane_curves() {
    Outcome o;
    CurveRecord c35 = implicitize_plane_curve(stratum(5), 3, 5);
    CurveRecord c56 = implicitize_plane_curve(stratum(5), 5, 6);
    o.require(equal_up_to_scale(c35.poly, golden_poly("curve35.txt")), "(3,5) differs");
    o.require(equal_up_to_scale(c56.poly, golden_poly("curve56.txt")), "(5,6) differs");
    Poly printed = golden_poly("curve34.txt");
    for (int t = 1; t <= 3; ++t) {
        auto at = sigma3_family_point(Rational(t));
        CurveRecord c34 = implicitize_plane_curve(stratum(3), 3, 4, at);
        o.require(equal_up_to_scale(c34.poly, specialize(printed, at)), "(3,4) differs at t=" + std::to_string(t));
    }
    if (o.ok) o.detail = "(3,5), (5,6) symbolic; (3,4) at t=1,2,3";
    return o;
}

Outcome veronese() {
    Outcome o;
    auto recs = veronese_tower(stratum(0), 2);
    o.require(recs.size() == 3, "tower too short");
    if (!o.ok) return o;
    o.require(equal_up_to_scale(recs[0].poly, parse_poly("p1^2 - 2*H[1,1] - lam")), "z^2 row");
    o.require(equal_up_to_scale(recs[1].poly, parse_poly("p1^3 - 3*H[1,1]*p1 - p3")), "p3 row");
    o.require(equal_up_to_scale(recs[2].poly, parse_poly("p1^5 - 5*H[1,1]*p1^3 + 15/2*H[1,1]^2*p1 - p5")), "p5 row");
    if (o.ok) o.detail = "p5 = " + recs[2].extra["form"].get<std::string>().substr(5);
    return o;
}

Outcome associativity() {
    Outcome o;
    std::size_t triples = 0;
    for (int m = 0; m <= 5; ++m) {
        VerifyReport rep = check_associativity(associativity_stratum(m, 8), 8);
        o.require(rep.count(Status::Fail) == 0, "m=" + std::to_string(m) + " has nonzero residuals");
        triples += rep.count(Status::Pass);
    }
    if (o.ok) o.detail = std::to_string(triples) + " triples zero for m=0..5";
    return o;
}

Outcome genus() {
    Outcome o;
    CurveRecord c6 = hyperelliptic_curve(1, stratum(2));
    std::map<VarId, Rational> at{{VarId::H(3, -1), Rational(0)}, {VarId::H(3, 1), Rational(0)},
                                 {VarId::H(3, 3), Rational(1, 2)}};
    o.require(hyperelliptic_genus(c6, at).genus == 1, "C6 genus");
    for (int n = 2; n <= 4; ++n) {
        CurveRecord r = hyperelliptic_curve(n, stratum(2 * n));
        std::mt19937_64 rng(static_cast<std::uint64_t>(n));
        int g = hyperelliptic_genus(r, admissible_specialization(r, rng)).genus;
        o.require(g == n, r.label + " genus " + std::to_string(g));
    }
    std::mt19937_64 rng(7);
    CurveRecord s0 = singular_family(stratum(0), 2);
    CurveRecord s2 = singular_family(stratum(2), 2);
    o.require(hyperelliptic_genus(s0, admissible_specialization(s0, rng, false)).genus == 0, "Sigma_0 singular");
    o.require(hyperelliptic_genus(s2, admissible_specialization(s2, rng, false)).genus == 1, "Sigma_2 singular");
    if (o.ok) o.detail = "C6:1 C5:2 C7:3 C9:4 sing0:0 sing2:1";
    return o;
}

Outcome relaxed_probe() {
    Outcome o;
    VerifyReport rep = relaxed_closure_probe(6);
    o.require(rep.overall() == Status::Pass, rep.verdicts.empty() ? "no verdict" : rep.verdicts.front().detail);
    if (o.ok) o.detail = "all tracked H[j,k], k>=1, forced to zero";
    return o;
}

Outcome shift() {
    Outcome o;
    VerifyReport rep = sigma1_shift_check(12);
    o.require(rep.overall() == Status::Pass, "shift mismatch");
    if (o.ok) o.detail = std::to_string(rep.verdicts.size()) + " relations identical";
    return o;
}

Outcome oracle_and_determinism() {
    Outcome o;
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> top(-3, 7);
    std::uniform_int_distribution<int> len(0, 9);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 4);
    auto series = [&] {
        int t = top(rng);
        LaurentSeries s(t, t - len(rng));
        for (int e = s.floor(); e <= t; ++e) {
            Rational q(num(rng), den(rng));
            q.canonicalize();
            s.set(e, Poly(q));
        }
        return s;
    };
    int mismatches = 0;
    for (int i = 0; i < 500; ++i) {
        LaurentSeries f = series();
        LaurentSeries g = series();
        LaurentSeries h = series_multiply(f, g);
        std::map<int, Rational> conv;
        for (int a = f.floor(); a <= f.top(); ++a) {
            for (int b = g.floor(); b <= g.top(); ++b) {
                conv[a + b] += f.coeff(a).constant_term() * g.coeff(b).constant_term();
            }
        }
        for (int e = h.floor(); e <= h.top(); ++e) mismatches += h.coeff(e).constant_term() != conv[e];
    }
    o.require(mismatches == 0, std::to_string(mismatches) + " coefficient mismatches");
    auto report = [](std::vector<std::string> args) {
        std::ostringstream out;
        std::ostringstream err;
        run_command(args, out, err);
        return out.str();
    };
    for (const auto& args : std::vector<std::vector<std::string>>{{"strata", "derive", "--m", "3"},
                                                                   {"strata", "curve", "--m", "5", "--kind", "plane"},
                                                                   {"strata", "genus", "--m", "4", "--kind", "hyperelliptic"}}) {
        o.require(report(args) == report(args), "report for " + args[1] + " not byte-identical");
    }
    if (o.ok) o.detail = "500 instances agree; 3 reports byte-identical";
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        std::string name;
        double limit_s;  // 0 = untimed
        std::function<Outcome()> run;
    };
    std::vector<Criterion> criteria = {
        {1, "Sigma_3 constraint recovery", 10, sigma3_constraints},
        {2, "Sigma_5 solved table", 10, sigma5_table},
        {3, "elliptic curve C6", 0, c6_curve},
        {4, "plane-curve implicitization", 60, plane_curves},
        {5, "Veronese tower", 0, veronese},
        {6, "associativity m=0..5", 300, associativity},
        {7, "genus certificates", 0, genus},
        {8, "relaxed-closure probe depth 6", 0, relaxed_probe},
        {9, "Sigma_1 to Sigma_0 shift", 0, shift},
        {10, "oracle equivalence and determinism", 0, oracle_and_determinism},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.limit_s > 0 && secs >= c.limit_s) o.require(false, "over the time limit");
        failures += !o.ok;
        std::ostringstream time;
        time << std::fixed << std::setprecision(2) << secs << "s";
        if (c.limit_s > 0) time << " < " << c.limit_s << "s";
        std::cout << "criterion " << std::setw(2) << c.id << ": " << (o.ok ? "PASS" : "FAIL") << "  " << c.name
                  << " [" << time.str() << "] " << o.detail << "\n";
    }
    std::cout << (failures ? std::to_string(failures) + " criteria failed" : std::string("all criteria pass")) << "\n";
    return failures ? 1 : 0;
}
