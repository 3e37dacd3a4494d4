#pragma once

#include <string>
#include <vector>

#include "strata/stratum.hpp"

namespace strata {

/// One instance of a printed constraint family.
struct PrintedRelation {
    std::string family;    // e.g. "Hodd-S2/2"
    std::string instance;  // index assignment, e.g. "m=1,n=2,k=0"
    Poly poly;
    /// The printed form needed reinterpretation; `note` says how.
    bool typo_suspect = false;
    std::string note;
};

/// Instances of the constraint families printed for Sigma_m with every
/// free index in [lo, bound]. H symbols structurally absent from the
/// family (rows without a basis element, positions outside the series
/// shape) read as zero; instances touching positions below the
/// truncation or beyond the max order are dropped.
std::vector<PrintedRelation> printed_relations(const StratumSpec& spec, int bound = 3);

/// The two quadratic Sigma_3 generators exactly as printed.
std::vector<Poly> nlin_s3_generators();

}  // namespace strata
