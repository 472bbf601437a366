#include "blockcheck/gf.hpp"

namespace blockcheck {

namespace {

bool is_prime_small(unsigned n) {
    if (n < 2) return false;
    for (unsigned d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

GF::GF(unsigned q) : q_(q) {
    if (q < 2 || q > 128) throw std::invalid_argument("GF: unsupported field size");
    add_.assign(q * q, 0);
    mul_.assign(q * q, 0);
    neg_.assign(q, 0);
    inv_.assign(q, 0);

    if (is_prime_small(q)) {
        for (unsigned a = 0; a < q; ++a)
            for (unsigned b = 0; b < q; ++b) {
                add_[a * q + b] = static_cast<uint8_t>((a + b) % q);
                mul_[a * q + b] = static_cast<uint8_t>((a * b) % q);
            }
    } else if (q == 9) {
        // a + 3b  <->  a + b*t with t^2 = -1 over GF(3).
        auto pack = [](unsigned a, unsigned b) { return a + 3 * b; };
        for (unsigned x = 0; x < 9; ++x)
            for (unsigned y = 0; y < 9; ++y) {
                unsigned a0 = x % 3, b0 = x / 3, a1 = y % 3, b1 = y / 3;
                add_[x * 9 + y] = static_cast<uint8_t>(pack((a0 + a1) % 3, (b0 + b1) % 3));
                unsigned re = (a0 * a1 + 2 * (b0 * b1)) % 3;  // t^2 = -1 = 2
                unsigned im = (a0 * b1 + b0 * a1) % 3;
                mul_[x * 9 + y] = static_cast<uint8_t>(pack(re, im));
            }
    } else {
        throw std::invalid_argument("GF: only prime fields and GF(9) are provided");
    }

    for (unsigned a = 0; a < q; ++a)
        for (unsigned b = 0; b < q; ++b) {
            if (add_[a * q + b] == 0) neg_[a] = static_cast<uint8_t>(b);
            if (mul_[a * q + b] == 1) inv_[a] = static_cast<uint8_t>(b);
        }
}

}  // namespace blockcheck
