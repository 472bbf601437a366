#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

namespace blockcheck {

using Int = mpz_class;
using Rat = mpq_class;

/// 2-part / odd-part decomposition of a positive integer: m = two_part * odd_part.
struct TwoAdicParts {
    Int two_part;
    Int odd_part;
};

/// v2(n): exponent of the highest power of 2 dividing n.  Requires n != 0.
inline long v2(const Int& n) {
    if (n == 0) throw std::invalid_argument("v2: argument must be nonzero");
    return static_cast<long>(mpz_scan1(n.get_mpz_t(), 0));
}

inline TwoAdicParts two_odd_parts(const Int& n) {
    if (n <= 0) throw std::invalid_argument("two_odd_parts: argument must be positive");
    long k = v2(n);
    Int two = 1;
    two <<= k;
    return {two, n / two};
}

/// Deterministic primality for values below 2^64 (Miller-Rabin on a fixed
/// witness set); larger inputs fall back to mpz_probab_prime_p, which is
/// treated as an internal error if it ever reports "probably".
bool is_prime(const Int& n);

/// Prime factors of n (ascending, deduplicated) via trial division up to 10^6;
/// a surviving cofactor must pass is_prime or an exception is thrown.
std::vector<Int> prime_factors(const Int& n);

/// Multiplicative order of q modulo the prime p.  Requires p prime, p does not divide q.
Int multiplicative_order(const Int& q, const Int& p);

}  // namespace blockcheck
