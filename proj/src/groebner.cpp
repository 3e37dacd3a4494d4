#include "strata/groebner.hpp"

#include <algorithm>
#include <cstdint>
#include <set>

namespace strata {

namespace {

using Exps = std::vector<std::uint16_t>;

struct GTerm {
    Exps e;  // e[0] is the total degree
    Integer c;
};
using GPoly = std::vector<GTerm>;  // descending grevlex, primitive

// Graded reverse lex: degree, then the smaller exponent in the last
// differing variable wins.
int grevlex(const Exps& a, const Exps& b) {
    if (a[0] != b[0]) return a[0] < b[0] ? -1 : 1;
    for (std::size_t i = a.size() - 1; i >= 1; --i) {
        if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
    }
    return 0;
}

bool divides(const Exps& a, const Exps& b) {
    for (std::size_t i = 1; i < a.size(); ++i) {
        if (a[i] > b[i]) return false;
    }
    return true;
}

Exps lcm(const Exps& a, const Exps& b) {
    Exps r(a.size(), 0);
    for (std::size_t i = 1; i < a.size(); ++i) {
        r[i] = std::max(a[i], b[i]);
        r[0] = static_cast<std::uint16_t>(r[0] + r[i]);
    }
    return r;
}

Exps quotient(const Exps& a, const Exps& b) {
    Exps r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = static_cast<std::uint16_t>(a[i] - b[i]);
    return r;
}

bool coprime(const Exps& a, const Exps& b) {
    for (std::size_t i = 1; i < a.size(); ++i) {
        if (a[i] && b[i]) return false;
    }
    return true;
}

void make_primitive(GPoly& f) {
    if (f.empty()) return;
    Integer g = 0;
    for (const auto& t : f) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
        if (g == 1) break;
    }
    if (f.front().c < 0) g = -g;
    if (g != 1) {
        for (auto& t : f) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), g.get_mpz_t());
    }
}

// a*f - b*m*g, merged.
GPoly combine(const Integer& a, const GPoly& f, const Integer& b, const Exps& m, const GPoly& g) {
    GPoly out;
    out.reserve(f.size() + g.size());
    std::size_t i = 0;
    std::size_t j = 0;
    auto shifted = [&](std::size_t idx) {
        Exps e(m.size());
        for (std::size_t k = 0; k < m.size(); ++k) e[k] = static_cast<std::uint16_t>(m[k] + g[idx].e[k]);
        return e;
    };
    Exps gj = j < g.size() ? shifted(j) : Exps{};
    while (i < f.size() || j < g.size()) {
        int cmp = i == f.size() ? -1 : j == g.size() ? 1 : grevlex(f[i].e, gj);
        if (cmp > 0) {
            out.push_back({f[i].e, a * f[i].c});
            ++i;
        } else if (cmp < 0) {
            out.push_back({std::move(gj), -b * g[j].c});
            ++j;
            if (j < g.size()) gj = shifted(j);
        } else {
            Integer c = a * f[i].c - b * g[j].c;
            if (c != 0) out.push_back({f[i].e, std::move(c)});
            ++i;
            ++j;
            if (j < g.size()) gj = shifted(j);
        }
    }
    return out;
}

// Work is counted as terms touched times coefficient limbs, so the limit
// tracks running time while staying deterministic.
struct Budget {
    std::size_t work = 0;
    std::size_t limit = 0;
    void charge(std::size_t terms, const Integer& a, const Integer& b) {
        std::size_t limbs = mpz_size(a.get_mpz_t()) + mpz_size(b.get_mpz_t()) + 1;
        work += terms * limbs;
        if (limit && work > limit) throw GroebnerBudgetExceeded("Groebner basis exceeded its work budget");
    }
};

// Full reduction; result primitive.
GPoly reduce(GPoly f, const std::vector<GPoly>& basis, Budget* budget = nullptr) {
    GPoly done;
    while (!f.empty()) {
        const GPoly* div = nullptr;
        for (const auto& g : basis) {
            if (divides(g.front().e, f.front().e)) {
                div = &g;
                break;
            }
        }
        if (!div) {
            done.push_back(std::move(f.front()));
            f.erase(f.begin());
            continue;
        }
        Integer lg = div->front().c;
        Integer lf = f.front().c;
        Integer g = gcd(lg, lf);
        Integer a = lg / g;
        Integer b = lf / g;
        if (budget) budget->charge(f.size() + div->size() + done.size(), lf, a);
        f = combine(a, f, b, quotient(f.front().e, div->front().e), *div);
        for (auto& t : done) t.c *= a;
        // Keep coefficient growth in check.
        Integer cont = 0;
        for (const auto& t : f) mpz_gcd(cont.get_mpz_t(), cont.get_mpz_t(), t.c.get_mpz_t());
        for (const auto& t : done) mpz_gcd(cont.get_mpz_t(), cont.get_mpz_t(), t.c.get_mpz_t());
        if (cont > 1) {
            for (auto& t : f) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), cont.get_mpz_t());
            for (auto& t : done) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), cont.get_mpz_t());
        }
    }
    make_primitive(done);
    return done;
}

struct Ring {
    std::vector<VarId> vars;  // descending VarId: index 1 is the largest

    std::size_t index(VarId v) const {
        auto it = std::find(vars.begin(), vars.end(), v);
        if (it == vars.end()) throw Error("variable " + v.name() + " outside the Groebner ring");
        return static_cast<std::size_t>(it - vars.begin()) + 1;
    }

    GPoly to_g(const Poly& f) const {
        Integer den = 1;
        for (const auto& t : f.terms()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coeff.get_den_mpz_t());
        GPoly out;
        for (const auto& t : f.terms()) {
            Exps e(vars.size() + 1, 0);
            for (const auto& [v, k] : t.mono.entries()) {
                e[index(v)] = static_cast<std::uint16_t>(k);
                e[0] = static_cast<std::uint16_t>(e[0] + k);
            }
            Rational c = t.coeff * den;
            out.push_back({std::move(e), c.get_num()});
        }
        std::sort(out.begin(), out.end(), [](const GTerm& a, const GTerm& b) { return grevlex(a.e, b.e) > 0; });
        return out;
    }

    Poly from_g(const GPoly& f) const {
        std::vector<Term> terms;
        for (const auto& t : f) {
            std::vector<Monomial::Entry> es;
            for (std::size_t i = 1; i < t.e.size(); ++i) {
                if (t.e[i]) es.emplace_back(vars[i - 1], t.e[i]);
            }
            std::sort(es.begin(), es.end());
            terms.push_back({Monomial::from_entries(std::move(es)), Rational(t.c)});
        }
        return Poly::from_terms(std::move(terms));
    }
};

}  // namespace

GroebnerBasis GroebnerBasis::compute(const std::vector<Poly>& generators, const std::vector<VarId>& extra,
                                     std::size_t max_work) {
    std::set<VarId> vs(extra.begin(), extra.end());
    for (const auto& g : generators) {
        for (VarId v : g.variables()) vs.insert(v);
    }
    Ring ring{{vs.rbegin(), vs.rend()}};

    std::vector<GPoly> G;
    struct Pair {
        std::size_t i, j;
        Exps lcm;
    };
    std::vector<Pair> pairs;
    GroebnerBasis out;
    Budget budget{0, max_work};

    auto add = [&](GPoly h) {
        std::size_t n = G.size();
        const Exps& lh = h.front().e;
        // Gebauer-Moeller style pruning of existing pairs (chain criterion).
        std::erase_if(pairs, [&](const Pair& p) {
            return divides(lh, p.lcm) && lcm(G[p.i].front().e, lh) != p.lcm && lcm(G[p.j].front().e, lh) != p.lcm;
        });
        std::vector<Pair> fresh;
        for (std::size_t i = 0; i < n; ++i) {
            if (G[i].empty()) continue;
            fresh.push_back({i, n, lcm(G[i].front().e, lh)});
        }
        // Keep one pair per lcm, drop pairs whose lcm a fresh one properly divides.
        std::vector<Pair> kept;
        for (const auto& p : fresh) {
            bool redundant = false;
            for (const auto& q : fresh) {
                if (&p != &q && divides(q.lcm, p.lcm) && (q.lcm != p.lcm || q.i < p.i)) {
                    redundant = true;
                    break;
                }
            }
            if (redundant) continue;
            if (coprime(G[p.i].front().e, lh)) continue;  // product criterion
            kept.push_back(p);
        }
        pairs.insert(pairs.end(), kept.begin(), kept.end());
        G.push_back(std::move(h));
    };

    for (const auto& g : generators) {
        if (g.is_zero()) continue;
        GPoly h = reduce(ring.to_g(g), G, &budget);
        if (!h.empty()) add(std::move(h));
    }
    while (!pairs.empty()) {
        // Normal strategy: smallest lcm first.
        auto it = std::min_element(pairs.begin(), pairs.end(),
                                   [](const Pair& a, const Pair& b) { return grevlex(a.lcm, b.lcm) < 0; });
        Pair p = *it;
        pairs.erase(it);
        ++out.pairs_;
        const GPoly& f = G[p.i];
        const GPoly& g = G[p.j];
        Integer lf = f.front().c;
        Integer lg = g.front().c;
        Integer d = gcd(lf, lg);
        GPoly s = combine(Integer(1), {}, Integer(-1), quotient(p.lcm, f.front().e), f);
        s = combine(lg / d, s, lf / d, quotient(p.lcm, g.front().e), g);
        // The leading terms cancel by construction.
        std::vector<GPoly> live;
        for (const auto& q : G) {
            if (!q.empty()) live.push_back(q);
        }
        GPoly h = reduce(std::move(s), live, &budget);
        if (h.empty()) continue;
        if (h.front().e[0] == 0) {
            G.assign(1, h);
            pairs.clear();
            break;
        }
        add(std::move(h));
    }

    // Minimal, then reduced.
    std::vector<GPoly> minimal;
    for (std::size_t i = 0; i < G.size(); ++i) {
        if (G[i].empty()) continue;
        bool drop = false;
        for (std::size_t j = 0; j < G.size() && !drop; ++j) {
            if (i == j || G[j].empty()) continue;
            if (divides(G[j].front().e, G[i].front().e) && (G[j].front().e != G[i].front().e || j < i)) drop = true;
        }
        if (!drop) minimal.push_back(G[i]);
    }
    std::vector<GPoly> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<GPoly> others;
        for (std::size_t j = 0; j < minimal.size(); ++j) {
            if (j != i) others.push_back(minimal[j]);
        }
        reduced.push_back(reduce(minimal[i], others));
    }
    std::sort(reduced.begin(), reduced.end(),
              [](const GPoly& a, const GPoly& b) { return grevlex(a.front().e, b.front().e) < 0; });
    out.work_ = budget.work;
    out.vars_ = ring.vars;
    for (const auto& g : reduced) out.basis_.push_back(ring.from_g(g));
    return out;
}

bool GroebnerBasis::is_unit() const { return basis_.size() == 1 && basis_.front().is_constant(); }

Poly GroebnerBasis::normal_form(const Poly& f) const {
    if (f.is_zero()) return f;
    if (is_unit()) return Poly();
    Ring ring{vars_};
    std::vector<GPoly> G;
    for (const auto& g : basis_) G.push_back(ring.to_g(g));
    GPoly r = reduce(ring.to_g(f), G);
    return ring.from_g(r);
}

std::optional<unsigned> GroebnerBasis::radical_power(const Poly& f, unsigned max_power) const {
    Poly p = f;
    for (unsigned r = 1; r <= max_power; ++r) {
        if (contains(p)) return r;
        if (r < max_power) p = normal_form(p * f);
    }
    return std::nullopt;
}

}  // namespace strata
