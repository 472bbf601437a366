#include "blockcheck/zsigmondy.hpp"

#include "blockcheck/cyclotomic_poly.hpp"

namespace blockcheck {

namespace {

bool has_order_n(const Int& q, const Int& p, unsigned n) { return multiplicative_order(q, p) == Int(n); }

}  // namespace

Int zsigmondy_prime(const Int& q, unsigned n) {
    if (q < 3 || q % 2 == 0) throw std::invalid_argument("zsigmondy_prime: odd q >= 3 required");
    if (n <= 2) throw std::invalid_argument("zsigmondy_prime: n > 2 required");

    // A prime with ord_p(q) = n divides Phi_n(q); scan its prime factors in
    // ascending order so the first qualifying one is the smallest overall.
    Int value = cyclotomic_at(n, q);
    Int residual = value;
    for (unsigned long t = 2; t <= 1000000; t == 2 ? t = 3 : t += 2) {
        if (!mpz_divisible_ui_p(residual.get_mpz_t(), t)) continue;
        while (mpz_divisible_ui_p(residual.get_mpz_t(), t)) residual /= static_cast<long>(t);
        Int p(static_cast<long>(t));
        if (has_order_n(q, p, n)) return p;
        if (residual == 1) break;
    }
    if (residual > 1) {
        // Every remaining prime factor exceeds the trial bound, hence does not
        // divide n, hence has ord exactly n and is = 1 (mod n); the smallest
        // divisor of the residual in that progression is therefore the answer.
        bool provable_prime = mpz_sizeinbase(residual.get_mpz_t(), 2) <= 64;
        if (provable_prime && is_prime(residual)) {
            if (has_order_n(q, residual, n)) return residual;
        } else {
            // p = 1 (mod n) and p odd, so p = 1 (mod lcm(2, n)).
            unsigned long step = (n % 2 == 0) ? n : 2 * n;
            unsigned long c = 1000000 - (1000000 % step) + 1;
            const unsigned long budget = 200000000;
            for (unsigned long iter = 0; iter < budget; ++iter, c += step) {
                Int cc(static_cast<long>(c));
                if (cc * cc > residual) {
                    // no factor up to the square root: the residual is prime
                    if (has_order_n(q, residual, n)) return residual;
                    break;
                }
                if (!mpz_divisible_ui_p(residual.get_mpz_t(), c)) continue;
                Int p(static_cast<long>(c));
                if (has_order_n(q, p, n)) return p;
            }
            if (Int(static_cast<long>(c)) * Int(static_cast<long>(c)) <= residual)
                throw std::runtime_error("zsigmondy_prime: factorisation budget exhausted");
        }
    }
    throw std::runtime_error("zsigmondy_prime: no primitive prime divisor found (internal error)");
}

}  // namespace blockcheck
