#pragma once

#include <vector>

#include "blockcheck/numutil.hpp"

namespace blockcheck {

/// Dense integer polynomial, coefficients ascending (coeffs[i] is the x^i coefficient).
using IntPoly = std::vector<Int>;

/// d-th cyclotomic polynomial as a monic integer polynomial.
/// Computed by exact division of x^d - 1 by the proper-divisor factors; results are cached.
const IntPoly& cyclotomic_poly(unsigned d);

/// Phi_d(q), exact.
Int cyclotomic_at(unsigned d, const Int& q);

/// v2(Phi_d(q)) for odd q, memoised per (d, q in long range).
long v2_cyclotomic_at(unsigned d, const Int& q);

IntPoly poly_mul(const IntPoly& a, const IntPoly& b);

/// Exact division; throws if the remainder is nonzero.
IntPoly poly_divexact(const IntPoly& num, const IntPoly& den);

Int poly_eval(const IntPoly& p, const Int& x);

}  // namespace blockcheck
