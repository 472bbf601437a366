#pragma once

#include <cstdint>
#include <vector>

#include <stdexcept>

namespace blockcheck {

/// Small finite field with full operation tables.  Prime fields are modular;
/// GF(9) is built as GF(3)[t]/(t^2+1).  Elements are 0..q-1 with 0, 1 the
/// additive and multiplicative identities.
class GF {
public:
    explicit GF(unsigned q);

    unsigned q() const { return q_; }
    uint8_t add(uint8_t a, uint8_t b) const { return add_[a * q_ + b]; }
    uint8_t sub(uint8_t a, uint8_t b) const { return add_[a * q_ + neg_[b]]; }
    uint8_t mul(uint8_t a, uint8_t b) const { return mul_[a * q_ + b]; }
    uint8_t neg(uint8_t a) const { return neg_[a]; }
    uint8_t inv(uint8_t a) const {
        if (a == 0) throw std::domain_error("GF: inverse of zero");
        return inv_[a];
    }

private:
    unsigned q_;
    std::vector<uint8_t> add_, mul_, neg_, inv_;
};

}  // namespace blockcheck
