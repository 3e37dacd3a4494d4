#pragma once

#include "strata/poly.hpp"

namespace strata {

/// Res_v(f, g) by the fraction-free subresultant PRS. Both inputs must
/// have positive degree in v. Sign convention matches the Sylvester
/// determinant with f's rows first.
Poly resultant_eliminate(const Poly& f, const Poly& g, VarId v);

/// Pseudo-remainder of a by b in v: lc(b)^(deg a - deg b + 1) a = q b + r.
Poly pseudo_remainder(const Poly& a, const Poly& b, VarId v);

}  // namespace strata
