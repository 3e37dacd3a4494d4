#include "strata/stratum.hpp"

#include <algorithm>

namespace strata {

bool StratumSpec::in_index_set(int order) const {
    if (order >= m) return true;
    if (order < -m) return false;
    return (order + m) % 2 == 0;
}

bool StratumSpec::is_basis_order(int order) const {
    if (order >= tail_start()) return true;
    return std::binary_search(basis_indices.begin(), basis_indices.end(), order);
}

int StratumSpec::tail_start() const {
    // After the last gap every order is present.
    return gaps.empty() ? lowest_basis_order() : gaps.back() + 1;
}

namespace {

// Basis orders below the tail start, together with the tail start itself.
std::pair<std::vector<int>, int> head_orders(int m) {
    if (m % 2 == 0) {
        std::vector<int> head;
        for (int j = 0; j < m; j += 2) head.push_back(j);
        return {head, m};
    }
    if (m == 1) return {{}, 1};
    // Sigma_{4q-1}: p_{2q+1}, ..., p_{4q-1}, then every order from 4q.
    // Sigma_{4q+1}: p_{2q+1}, ..., p_{4q-1}, then every order from 4q+1.
    int q = (m + 1) / 4;
    bool minus = (m + 1) % 4 == 0;
    if (!minus) q = (m - 1) / 4;
    std::vector<int> head;
    for (int j = 2 * q + 1; j <= 4 * q - 1; j += 2) head.push_back(j);
    int tail = minus ? 4 * q : 4 * q + 1;
    // The tail's first element may coincide with the head's last (m = 3).
    std::erase_if(head, [tail](int j) { return j >= tail; });
    return {head, tail};
}

}  // namespace

StratumSpec make_stratum_spec(int m, int depth, int max_order) {
    if (m < 0 || m > kMaxStratum) {
        throw UnsupportedStratum("stratum m = " + std::to_string(m) + " is outside the supported range [0, " +
                                 std::to_string(kMaxStratum) + "]");
    }
    if (depth < 1) throw Error("depth must be >= 1");
    StratumSpec s;
    s.m = m;
    s.depth = depth;
    s.codim = m * (m + 1) / 2;
    auto [head, tail] = head_orders(m);
    s.max_order = std::max(max_order, tail);
    for (int order = -m; order <= s.max_order; ++order) {
        if (s.in_index_set(order)) s.index_set.push_back(order);
    }
    s.basis_indices = head;
    for (int j = tail; j <= s.max_order; ++j) s.basis_indices.push_back(j);
    for (int order = 0; order < tail; ++order) {
        if (!std::binary_search(head.begin(), head.end(), order)) s.gaps.push_back(order);
    }
    for (int e = 0; e < m; ++e) {
        if (!s.in_index_set(e)) s.shape_exponents.push_back(e);
    }
    return s;
}

LaurentSeries make_basis_series(int j, const std::vector<int>& shape_exponents, int depth) {
    LaurentSeries s(j, -depth);
    s.set(j, Poly(1L));
    for (int e : shape_exponents) {
        if (e < j) s.set(e, Poly(VarId::H(j, -e)));
    }
    for (int k = 1; k <= depth; ++k) s.set(-k, Poly(VarId::H(j, k)));
    return s;
}

const LaurentSeries& BasisFamily::element(int j) const {
    auto it = elements.find(j);
    if (it == elements.end()) {
        throw Error("basis element p" + std::to_string(j) + " not present in Sigma_" + std::to_string(spec.m) +
                    " (max order " + std::to_string(spec.max_order) + ")");
    }
    return it->second;
}

std::vector<VarId> BasisFamily::parameters() const {
    std::set<VarId> vars;
    for (const auto& [j, s] : elements) {
        for (int e = s.floor(); e <= s.top(); ++e) {
            auto v = s.coeff(e).variables();
            vars.insert(v.begin(), v.end());
        }
    }
    return {vars.begin(), vars.end()};
}

nlohmann::json BasisFamily::to_json() const {
    nlohmann::json elems = nlohmann::json::object();
    for (const auto& [j, s] : elements) elems[std::to_string(j)] = s.to_json();
    return {{"m", spec.m},
            {"depth", spec.depth},
            {"codim", spec.codim},
            {"index_set", spec.index_set},
            {"basis_indices", spec.basis_indices},
            {"gaps", spec.gaps},
            {"elements", elems}};
}

BasisFamily build_basis(int m, int depth, int max_order) {
    BasisFamily family{make_stratum_spec(m, depth, max_order), {}};
    for (int j : family.spec.basis_indices) {
        family.elements.emplace(j, make_basis_series(j, family.spec.shape_exponents, depth));
    }
    return family;
}

}  // namespace strata
