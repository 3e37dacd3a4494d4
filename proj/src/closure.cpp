#include "strata/closure.hpp"

#include <algorithm>
#include <set>

namespace strata {

ReductionResult reduce_against(const LaurentSeries& s, const std::map<int, const LaurentSeries*>& reducers) {
    ReductionResult out;
    out.top = s.top();
    out.reliable_floor = s.floor();
    LaurentSeries work = s;
    for (int e = s.top(); e >= s.floor(); --e) {
        Poly c = work.coeff(e);
        if (c.is_zero()) continue;
        auto it = reducers.find(e);
        if (it == reducers.end()) {
            out.residual.emplace(e, std::move(c));
            continue;
        }
        const LaurentSeries& r = *it->second;
        if (r.floor() > s.floor()) {
            throw Error("reducer p" + std::to_string(e) + " is shallower than the series being reduced");
        }
        for (int x = std::min(e, r.top()); x >= s.floor(); --x) {
            const Poly& rc = r.coeff(x);
            if (!rc.is_zero()) work.add_to(x, -(c * rc));
        }
        out.constants.emplace(e, std::move(c));
    }
    return out;
}

namespace {

std::map<int, const LaurentSeries*> basis_reducers(const BasisFamily& basis) {
    std::map<int, const LaurentSeries*> reducers;
    for (const auto& [j, s] : basis.elements) reducers.emplace(j, &s);
    return reducers;
}

void require_order(const BasisFamily& basis, int order, const char* what) {
    if (order > basis.spec.max_order) {
        throw Error(std::string(what) + " reaches order " + std::to_string(order) + " beyond the family's max order " +
                    std::to_string(basis.spec.max_order));
    }
}

}  // namespace

ReductionResult reduce_product(const BasisFamily& basis, int j, int k) {
    if (!basis.spec.is_basis_order(j) || !basis.spec.is_basis_order(k)) {
        throw Error("reduce_product: (" + std::to_string(j) + "," + std::to_string(k) +
                    ") are not basis orders of Sigma_" + std::to_string(basis.spec.m));
    }
    require_order(basis, j + k, "product");
    int needed = std::max(j, k) + 1;
    if (basis.spec.depth < needed) {
        throw DepthError("reliable window of p" + std::to_string(j) + "*p" + std::to_string(k) +
                             " is empty at depth " + std::to_string(basis.spec.depth) + "; need depth >= " +
                             std::to_string(needed),
                         needed);
    }
    auto product = series_multiply(basis.element(j), basis.element(k));
    return reduce_against(product, basis_reducers(basis));
}

ReductionResult reduce_shift(const BasisFamily& basis, int j) {
    require_order(basis, j + 2, "shift");
    if (basis.spec.depth < 3) throw DepthError("z^2 shift needs depth >= 3", 3);
    return reduce_against(shift_even(basis.element(j), 1), basis_reducers(basis));
}

// ----------------------------------------------------------- parameters

ParameterFilter natural_parameters(int m) {
    if (m == 0) return [](VarId v) { return v == VarId::H(1, 1); };
    if (m == 1) return [](VarId v) { return v == VarId::H(1, 0) || v == VarId::H(1, 1); };
    if (m % 2 == 0) {
        int n = m / 2;
        return [n](VarId v) {
            return v.is_param() && v.j == 2 * n + 1 && (v.k % 2 != 0) && v.k >= 1 - 2 * n && v.k <= 2 * n + 1;
        };
    }
    if (m == 3) {
        return [](VarId v) { return v.is_param() && (v.j == 3 || v.j == 4) && (v.k == -2 || v.k == 0); };
    }
    bool minus = (m + 1) % 4 == 0;
    int q = minus ? (m + 1) / 4 : (m - 1) / 4;
    int first = 2 * q + 1;
    int second = minus ? 4 * q : -1;
    return [first, second](VarId v) {
        if (!v.is_param()) return false;
        if (v.j == first) return v.k <= 0;
        return v.j == second && v.k == 2 - second;
    };
}

// ------------------------------------------------------- ConstraintSet

Poly ConstraintSet::apply_solved(const Poly& f) const { return substitute(f, solved); }

LaurentSeries ConstraintSet::apply_solved(const LaurentSeries& s) const { return series_substitute(s, solved); }

Poly ConstraintSet::reduce(const Poly& f) const {
    Poly g = apply_solved(f);
    if (g.is_zero() || ideal_basis.empty()) return g;
    return lex_normal_form(g, ideal_basis);
}

namespace {

nlohmann::json poly_list(const std::vector<Poly>& ps) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& p : ps) a.push_back(p.str());
    return a;
}

nlohmann::json var_list(const std::vector<VarId>& vs) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& v : vs) a.push_back(v.name());
    return a;
}

}  // namespace

nlohmann::json ConstraintSet::to_json() const {
    nlohmann::json solved_json = nlohmann::json::object();
    for (const auto& [v, p] : solved) solved_json[v.name()] = p.str();
    return {{"stratum", stratum},
            {"obstructions", poly_list(obstructions)},
            {"solved", solved_json},
            {"independents", var_list(independents)},
            {"undetermined", var_list(undetermined)},
            {"unresolved", poly_list(unresolved)}};
}

int homogeneous_weight(const Poly& f) {
    std::optional<int> w;
    for (const auto& t : f.terms()) {
        int tw = 0;
        for (const auto& [v, e] : t.mono.entries()) {
            if (v.is_param()) tw += v.weight() * static_cast<int>(e);
        }
        if (w && *w != tw) throw Error("obstruction is not weight-homogeneous: " + f.str());
        w = tw;
    }
    return w.value_or(0);
}

// ------------------------------------------------------------ derivation

ConstraintSet derive_constraint_set(const BasisFamily& basis, int max_index) {
    std::set<Poly, bool (*)(const Poly&, const Poly&)> found(
        [](const Poly& a, const Poly& b) { return a.str() < b.str(); });
    auto collect = [&](const ReductionResult& r) {
        for (const auto& [e, c] : r.residual) found.insert(c.normalized());
    };
    const auto& orders = basis.spec.basis_indices;
    for (int j : orders) {
        if (j + 2 > basis.spec.max_order) break;
        collect(reduce_shift(basis, j));
    }
    for (std::size_t a = 0; a < orders.size() && orders[a] <= max_index; ++a) {
        for (std::size_t b = a; b < orders.size() && orders[b] <= max_index; ++b) {
            collect(reduce_product(basis, orders[a], orders[b]));
        }
    }
    ConstraintSet cs;
    cs.stratum = basis.spec.m;
    cs.obstructions.assign(found.begin(), found.end());
    std::stable_sort(cs.obstructions.begin(), cs.obstructions.end(), [](const Poly& a, const Poly& b) {
        int wa = homogeneous_weight(a);
        int wb = homogeneous_weight(b);
        if (wa != wb) return wa < wb;
        if (a.size() != b.size()) return a.size() < b.size();
        return a.str() < b.str();
    });
    std::set<VarId> params;
    for (const auto& [j, s] : basis.elements) {
        for (int e = s.floor(); e <= s.top(); ++e) {
            auto vs = s.coeff(e).variables();
            params.insert(vs.begin(), vs.end());
        }
    }
    cs.undetermined.assign(params.begin(), params.end());
    return cs;
}

// ------------------------------------------------------------ elimination

namespace {

std::optional<VarId> pick_dependent(const Poly& f, const ParameterFilter& keep) {
    auto vars = f.variables();
    for (auto it = vars.rbegin(); it != vars.rend(); ++it) {
        if (keep(*it)) continue;
        if (f.linear_coefficient(*it)) return *it;
    }
    return std::nullopt;
}

void add_generator(ConstraintSet& cs, const Poly& g) {
    Poly nf = lex_normal_form(g, cs.ideal_basis);
    if (nf.is_zero()) return;
    cs.unresolved.push_back(g.normalized());
    cs.ideal_basis.push_back(nf.normalized());
    // Inter-reduce older generators against the new one.
    for (std::size_t i = 0; i + 1 < cs.ideal_basis.size(); ++i) {
        std::vector<Poly> others;
        for (std::size_t k = 0; k < cs.ideal_basis.size(); ++k) {
            if (k != i) others.push_back(cs.ideal_basis[k]);
        }
        Poly r = lex_normal_form(cs.ideal_basis[i], others);
        if (!r.is_zero()) cs.ideal_basis[i] = r.normalized();
    }
}

}  // namespace

ConstraintSet eliminate_by_weight(ConstraintSet cs) {
    auto keep = natural_parameters(cs.stratum);
    return eliminate_by_weight(std::move(cs), keep);
}

ConstraintSet eliminate_by_weight(ConstraintSet cs, ParameterFilter keep) {
    std::map<int, std::vector<Poly>> by_weight;
    std::set<VarId> all_params(cs.undetermined.begin(), cs.undetermined.end());
    for (const auto& f : cs.obstructions) {
        by_weight[homogeneous_weight(f)].push_back(f);
        auto vs = f.variables();
        all_params.insert(vs.begin(), vs.end());
    }
    cs.solved.clear();
    cs.unresolved.clear();
    cs.ideal_basis.clear();
    cs.keep = keep;

    for (auto& [w, group] : by_weight) {
        std::vector<Poly> pending;
        for (const auto& f : group) {
            Poly g = substitute(f, cs.solved);
            if (!g.is_zero()) pending.push_back(g);
        }
        bool progress = true;
        while (progress) {
            progress = false;
            for (std::size_t i = 0; i < pending.size(); ++i) {
                const Poly f = pending[i];
                auto v = pick_dependent(f, keep);
                if (!v) continue;
                Rational c = *f.linear_coefficient(*v);
                Poly value = (f - Poly(*v).scaled(c)).scaled(-1 / c);
                std::map<VarId, Poly> one{{*v, value}};
                for (auto& [u, val] : cs.solved) {
                    if (val.contains(*v)) val = substitute(val, one);
                }
                cs.solved.emplace(*v, value);
                pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(i));
                std::vector<Poly> next;
                for (const auto& p : pending) {
                    Poly q = p.contains(*v) ? substitute(p, one) : p;
                    if (!q.is_zero()) next.push_back(std::move(q));
                }
                pending = std::move(next);
                progress = true;
                break;
            }
        }
        for (const auto& f : pending) {
            if (f.is_constant()) {
                throw InconsistentConstraints("weight " + std::to_string(w) + " relation reduces to the nonzero constant " +
                                              f.str());
            }
            add_generator(cs, f);
        }
    }

    cs.independents.clear();
    cs.undetermined.clear();
    for (VarId v : all_params) {
        if (cs.solved.count(v)) continue;
        if (keep(v)) {
            cs.independents.push_back(v);
        } else {
            cs.undetermined.push_back(v);
        }
    }
    return cs;
}

BasisFamily solved_basis(const BasisFamily& basis, const ConstraintSet& cs) {
    BasisFamily out{basis.spec, {}};
    for (const auto& [j, s] : basis.elements) out.elements.emplace(j, cs.apply_solved(s));
    return out;
}

ConstraintSet derive_and_eliminate(const BasisFamily& basis, int max_index) {
    return eliminate_by_weight(derive_constraint_set(basis, max_index));
}

int default_max_index(int m) { return std::max(kDefaultMaxIndex, m + 1); }

bool SolvedStratum::is_undetermined(VarId v) const {
    return std::binary_search(cs.undetermined.begin(), cs.undetermined.end(), v);
}

bool SolvedStratum::determined(const Poly& f) const {
    for (VarId v : f.variables()) {
        if (v.is_param() && is_undetermined(v)) return false;
    }
    return true;
}

SolvedStratum derive_stratum(int m, int depth, int max_index, int max_order) {
    if (max_index < 0) max_index = default_max_index(m);
    if (max_order < 0) max_order = 2 * max_index + 2;
    SolvedStratum out{build_basis(m, depth, max_order), {}, {}};
    out.cs = derive_and_eliminate(out.basis, max_index);
    out.solved = solved_basis(out.basis, out.cs);
    return out;
}

}  // namespace strata
