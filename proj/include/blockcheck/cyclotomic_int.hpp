#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "blockcheck/numutil.hpp"

namespace blockcheck {

/// Element of Z[zeta_e] in the power basis {1, z, ..., z^{phi(e)-1}} modulo
/// the e-th cyclotomic polynomial.  The power basis is an integral basis, so
/// integer coordinate vectors are exactly the algebraic integers of Q(zeta_e).
class CycInt {
public:
    CycInt() : conductor_(1), coeffs_(1, 0) {}
    explicit CycInt(unsigned conductor);
    CycInt(unsigned conductor, long long rational);

    /// zeta_e^k.
    static CycInt root_power(unsigned conductor, unsigned k);

    unsigned conductor() const { return conductor_; }
    const std::vector<long long>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_rational() const;
    long long rational_value() const;  // throws unless is_rational()

    CycInt operator+(const CycInt& o) const;
    CycInt operator-(const CycInt& o) const;
    CycInt operator*(const CycInt& o) const;
    CycInt operator-() const;
    CycInt& operator+=(const CycInt& o) { return *this = *this + o; }
    bool operator==(const CycInt& o) const;

    CycInt conjugate() const;                 // complex conjugation zeta -> zeta^{-1}
    CycInt galois(unsigned j) const;          // zeta -> zeta^j, gcd(j, e) = 1
    CycInt embed(unsigned new_conductor) const;  // e | new_conductor

    /// True when every coordinate is divisible by n (the algebraic-integer
    /// test for (*this)/n, valid because the power basis is integral).
    bool divisible_by(long long n) const;

    std::string to_string() const;

private:
    void match(const CycInt& o) const {
        if (conductor_ != o.conductor_) throw std::invalid_argument("CycInt: conductor mismatch");
    }
    unsigned conductor_;
    std::vector<long long> coeffs_;  // length phi(e)
};

/// phi(e) and the reduction table of z^m (0 <= m < e) to the power basis.
unsigned euler_phi(unsigned e);
const std::vector<std::vector<long long>>& power_basis_table(unsigned conductor);

}  // namespace blockcheck
