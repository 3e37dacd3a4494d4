#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "strata/closure.hpp"

namespace strata {

enum class Status { Pass, Flagged, Fail };
std::string to_string(Status s);

struct Verdict {
    std::string check;
    Status status = Status::Pass;
    /// How the verdict was reached (exact-zero, member, ...).
    std::string method;
    std::string detail;

    nlohmann::json to_json() const;
};

struct VerifyReport {
    std::vector<Verdict> verdicts;
    nlohmann::json data = nlohmann::json::object();

    void add(std::string check, Status status, std::string method = {}, std::string detail = {});
    std::size_t count(Status s) const;
    /// Fail if anything failed, else Flagged if anything was flagged.
    Status overall() const;
    void merge(const VerifyReport& other);
    nlohmann::json to_json() const;
};

enum class Membership { Zero, Member, NumericallyOnVariety, NotMember };
std::string to_string(Membership m);

/// Substitutes `solved`, then tests membership in the ideal of the
/// unresolved relations by lex division. On Sigma_3 a failed division
/// falls back to 25 seeded points of the rational family.
Membership check_membership(const SolvedStratum& s, const Poly& f);

/// Every printed constraint instance (see printed_relations) checked
/// against the derivation. Instances touching undetermined parameters are
/// counted in data["skipped"].
VerifyReport verify_printed_relations(const SolvedStratum& s, int bound = 3);

/// Depth and max order at which products p_k p_s with s <= 2*max_index
/// have every structure constant available.
int associativity_depth(int max_index);
SolvedStratum associativity_stratum(int m, int max_index);

/// sum_s C^s_ij C^r_ks - C^s_ik C^r_js for all basis orders i, j < k up to
/// max_index and every r, reduced modulo the unresolved relations.
VerifyReport check_associativity(const SolvedStratum& s, int max_index);

/// Sigma_3 with full tails where z^2 p_j may also spill into the ambient
/// element p_1; reports which tracked tail symbols H[j,k] (j = 3..6,
/// 1 <= k <= depth - 2) the closure forces to zero, i.e. lie in the
/// radical of the remaining relations (some power <= 4 in the ideal).
VerifyReport relaxed_closure_probe(int depth, int max_index = kDefaultMaxIndex);

/// Compares the Sigma_1 expansions of z^2 and p_j - H[j,0] in powers of
/// p_1 - H[1,0] with the Sigma_0 expansions in powers of p_1.
VerifyReport sigma1_shift_check(int depth = kDefaultDepth, int max_order = 7);

}  // namespace strata
