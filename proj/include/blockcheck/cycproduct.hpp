#pragma once

#include <map>
#include <string>

#include "blockcheck/cyclotomic_poly.hpp"
#include "blockcheck/numutil.hpp"

namespace blockcheck {

/// Formal product  scalar * q^qpow * prod_d Phi_d(q)^{e_d}  with exact rational
/// scalar.  Negative exponents are permitted while forming quotients; an object
/// used as a group order or character degree must normalise to nonnegative
/// exponents and positive scalar (checked by require_effective()).
class CycProduct {
public:
    CycProduct() : scalar_(1) {}
    explicit CycProduct(const Rat& scalar) : scalar_(scalar) { canonicalize(); }
    CycProduct(Rat scalar, long qpow, std::map<unsigned, long> phis)
        : scalar_(std::move(scalar)), qpow_(qpow), phis_(std::move(phis)) {
        canonicalize();
    }

    static CycProduct one() { return CycProduct(); }
    static CycProduct q_power(long k) { return CycProduct(Rat(1), k, {}); }
    static CycProduct phi(unsigned d, long e = 1) { return CycProduct(Rat(1), 0, {{d, e}}); }

    /// q^m - 1 expanded into cyclotomic factors (m >= 1).
    static CycProduct q_pow_minus_one(unsigned m);
    /// q^m + 1 expanded into cyclotomic factors (m >= 1).
    static CycProduct q_pow_plus_one(unsigned m);

    const Rat& scalar() const { return scalar_; }
    long qpow() const { return qpow_; }
    const std::map<unsigned, long>& phi_exponents() const { return phis_; }
    long phi_exponent(unsigned d) const {
        auto it = phis_.find(d);
        return it == phis_.end() ? 0 : it->second;
    }

    bool is_zero() const { return scalar_ == 0; }

    CycProduct& operator*=(const CycProduct& o);
    CycProduct& operator/=(const CycProduct& o);
    friend CycProduct operator*(CycProduct a, const CycProduct& b) { return a *= b; }
    friend CycProduct operator/(CycProduct a, const CycProduct& b) { return a /= b; }
    bool operator==(const CycProduct& o) const {
        return scalar_ == o.scalar_ && qpow_ == o.qpow_ && phis_ == o.phis_;
    }

    /// Substitute q -> q^j: multiplies the q-power by j and rewrites every
    /// Phi_d(q^j) as a product of Phi_e(q).
    CycProduct inflate(unsigned j) const;

    /// Substitute q -> -q.  Swaps Phi_1<->Phi_2, Phi_d(odd d>1)<->Phi_2d, fixes
    /// 4|d; the resulting global sign is discarded (scalar made positive).
    CycProduct negate_q() const;

    /// Exact evaluation at an integer q >= 2.
    Rat eval(const Int& q) const;

    /// Evaluation that must land in Z (group orders, character degrees).
    Int eval_integer(const Int& q) const;

    /// v2 of the evaluation at odd q, computed exponent-wise:
    /// sum e_d * v2(Phi_d(q)) + v2(num) - v2(den).
    long v2_at(const Int& q) const;

    /// Throws unless all exponents are >= 0 and the scalar is positive.
    void require_effective(const char* what) const;

    /// Compact text form, e.g. "1/3 * q^7 * F1^6 F2^4 F4^2 F5 F8".
    std::string to_string() const;

    /// Structured single-line form used in report files:
    /// {"scalar":[num,den],"qpow":n,"phis":{"d":e,...}}.
    std::string to_structured() const;
    static CycProduct from_structured(const std::string& json_text);

private:
    void canonicalize();

    Rat scalar_;
    long qpow_ = 0;
    std::map<unsigned, long> phis_;
};

}  // namespace blockcheck
