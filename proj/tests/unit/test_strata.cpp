#include <doctest.h>

#include <algorithm>
#include <set>

#include "strata/relations.hpp"
#include "strata/verify.hpp"
#include "support.hpp"

using namespace strata;
using strata::test::random_rational;

namespace {

BasisFamily specialize_family(const BasisFamily& b, const std::map<VarId, Rational>& at) {
    BasisFamily out;
    out.spec = b.spec;
    for (const auto& [j, e] : b.elements) {
        out.elements[j] = e.map_coeffs([&](const Poly& c) { return specialize(c, at); });
    }
    return out;
}

std::set<std::string> normalized_set(const std::vector<Poly>& ps) {
    std::set<std::string> out;
    for (const auto& p : ps) out.insert(p.normalized().str());
    return out;
}

}  // namespace

TEST_CASE("stratum order data") {
    for (int m = 0; m <= kMaxStratum; ++m) {
        StratumSpec s = make_stratum_spec(m);
        CHECK(s.codim == m * (m + 1) / 2);
        // S_m = {-m, -m+2, ..., m, m+1, m+2, ...}
        for (int e = -m - 2; e <= s.max_order; ++e) {
            bool in = e >= -m && (e > m || (e + m) % 2 == 0);
            CHECK(s.in_index_set(e) == in);
        }
        for (int j : s.basis_indices) {
            CHECK(j >= 0);
            CHECK(s.in_index_set(j));
        }
        CHECK(std::is_sorted(s.basis_indices.begin(), s.basis_indices.end()));
        for (int g : s.gaps) CHECK_FALSE(s.is_basis_order(g));
    }
    CHECK_THROWS_AS(make_stratum_spec(10), UnsupportedStratum);
}

TEST_CASE("basis elements have the canonical shape") {
    for (int m = 0; m <= kMaxStratum; ++m) {
        BasisFamily b = build_basis(m, 6, 12);
        for (const auto& [j, e] : b.elements) {
            CHECK(e.top() == j);
            CHECK(e.coeff(j) == Poly(1L));
            CHECK(e.floor() == -6);
            // Nonnegative exponents below j carry a parameter only where no
            // basis element of that order exists.
            for (int x = 0; x < j; ++x) {
                if (b.spec.is_basis_order(x)) CHECK(e.coeff(x).is_zero());
            }
            for (int k = 1; k <= 6; ++k) CHECK(e.coeff(-k) == Poly(VarId::H(j, k)));
        }
    }
}

TEST_CASE("structure constants are symmetric") {
    for (int m : {0, 2, 3}) {
        SolvedStratum s = derive_stratum(m);
        const auto& orders = s.solved.spec.basis_indices;
        for (int j : orders) {
            for (int k : orders) {
                if (j >= k || j + k > 10) continue;
                auto a = reduce_product(s.solved, j, k);
                auto b = reduce_product(s.solved, k, j);
                CHECK(a.constants == b.constants);
            }
        }
    }
}

TEST_CASE("reduction commutes with specialization") {
    std::mt19937_64 rng(31);
    int points = 0;
    for (int m : {0, 2, 4}) {
        SolvedStratum s = derive_stratum(m);
        auto params = s.solved.parameters();
        const auto& orders = s.solved.spec.basis_indices;
        for (int trial = 0; trial < 17 && points < 50; ++trial, ++points) {
            std::map<VarId, Rational> at;
            for (VarId v : params) at[v] = random_rational(rng, 5, 3);
            BasisFamily spec = specialize_family(s.solved, at);
            std::uniform_int_distribution<std::size_t> pick(0, 4);
            int j = orders[pick(rng)];
            int k = orders[pick(rng)];
            auto symbolic = reduce_product(s.solved, j, k).constants;
            auto numeric = reduce_product(spec, j, k).constants;
            std::set<int> ls;
            for (const auto& [l, c] : symbolic) ls.insert(l);
            for (const auto& [l, c] : numeric) ls.insert(l);
            for (int l : ls) {
                Poly sym = symbolic.contains(l) ? specialize(symbolic[l], at) : Poly();
                Poly num = numeric.contains(l) ? numeric[l] : Poly();
                CHECK_MESSAGE(sym == num, "m=" << m << " p" << j << "*p" << k << " l=" << l);
            }
        }
    }
    CHECK(points == 50);
}

TEST_CASE("derived products close modulo the constraints") {
    for (int m : {0, 1, 2, 4}) {
        SolvedStratum s = derive_stratum(m);
        CHECK(s.cs.obstructions.empty() == false);
        const auto& orders = s.solved.spec.basis_indices;
        for (int j : orders) {
            for (int k : orders) {
                if (j > k || k > 6) continue;
                auto r = reduce_product(s.solved, j, k);
                for (const auto& [e, c] : r.residual) {
                    if (!s.determined(c)) continue;
                    CHECK_MESSAGE(s.cs.reduce(c).is_zero(), "m=" << m << " p" << j << "*p" << k << " z^" << e);
                }
            }
        }
    }
}

TEST_CASE("Sigma_3 leaves exactly the two quadratic generators") {
    SolvedStratum s = derive_stratum(3);
    CHECK(s.cs.unresolved.size() == 2);
    CHECK(normalized_set(s.cs.unresolved) == normalized_set(nlin_s3_generators()));
}

TEST_CASE("big cell has no unresolved relations") {
    SolvedStratum s = derive_stratum(0);
    CHECK(s.cs.unresolved.empty());
    std::vector<VarId> ind = s.cs.independents;
    CHECK(std::find(ind.begin(), ind.end(), VarId::H(1, 1)) != ind.end());
}

TEST_CASE("printed relation families against the derivation") {
    for (int m : {0, 2, 3, 4, 5}) {
        SolvedStratum s = derive_stratum(m);
        VerifyReport rep = verify_printed_relations(s);
        CHECK_MESSAGE(rep.count(Status::Fail) == 0, "m=" << m);
        CHECK(!rep.verdicts.empty());
        if (m == 0 || m == 3 || m == 5) CHECK(rep.count(Status::Flagged) == 0);
    }
}

TEST_CASE("flagged relation instances are the reinterpreted ones") {
    SolvedStratum s = derive_stratum(2);
    auto rels = printed_relations(s.basis.spec);
    std::set<std::string> suspects;
    for (const auto& r : rels) {
        if (r.typo_suspect) {
            CHECK_FALSE(r.note.empty());
            suspects.insert(r.family + "[" + r.instance + "]");
        }
    }
    VerifyReport rep = verify_printed_relations(s);
    for (const auto& v : rep.verdicts) {
        if (v.status == Status::Flagged) CHECK_MESSAGE(suspects.contains(v.check), v.check);
    }
}

TEST_CASE("associativity on small windows") {
    for (int m : {0, 1, 3}) {
        SolvedStratum s = associativity_stratum(m, 5);
        VerifyReport rep = check_associativity(s, 5);
        CHECK(rep.count(Status::Fail) == 0);
        CHECK(rep.count(Status::Pass) > 0);
    }
}

TEST_CASE("Sigma_1 maps onto the big cell under the constant shift") {
    VerifyReport rep = sigma1_shift_check();
    CHECK(rep.overall() == Status::Pass);
    CHECK(rep.verdicts.size() >= 6);
}

TEST_CASE("too shallow a depth is reported") {
    CHECK_THROWS_AS(derive_stratum(0, 8), DepthError);
}
