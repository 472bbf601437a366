#pragma once

#include "blockcheck/numutil.hpp"

namespace blockcheck {

/// Smallest prime p with p | q^n - 1 and p not dividing q^m - 1 for 0 < m < n
/// (equivalently: q has multiplicative order n modulo p).  Requires q odd >= 3
/// and n > 2, where existence is guaranteed; failure to find one is an
/// internal error.
Int zsigmondy_prime(const Int& q, unsigned n);

}  // namespace blockcheck
