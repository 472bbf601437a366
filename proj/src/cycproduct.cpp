#include "blockcheck/cycproduct.hpp"

#include <sstream>

#include <json.hpp>

namespace blockcheck {

void CycProduct::canonicalize() {
    scalar_.canonicalize();
    if (scalar_ == 0) {
        qpow_ = 0;
        phis_.clear();
        return;
    }
    for (auto it = phis_.begin(); it != phis_.end();) {
        if (it->second == 0)
            it = phis_.erase(it);
        else
            ++it;
    }
}

CycProduct CycProduct::q_pow_minus_one(unsigned m) {
    if (m == 0) throw std::invalid_argument("q_pow_minus_one: m >= 1 required");
    std::map<unsigned, long> phis;
    for (unsigned d = 1; d <= m; ++d)
        if (m % d == 0) phis[d] = 1;
    return CycProduct(Rat(1), 0, std::move(phis));
}

CycProduct CycProduct::q_pow_plus_one(unsigned m) {
    // (q^{2m} - 1)/(q^m - 1): the divisors of 2m that do not divide m.
    if (m == 0) throw std::invalid_argument("q_pow_plus_one: m >= 1 required");
    std::map<unsigned, long> phis;
    for (unsigned d = 1; d <= 2 * m; ++d)
        if ((2 * m) % d == 0 && m % d != 0) phis[d] = 1;
    return CycProduct(Rat(1), 0, std::move(phis));
}

CycProduct& CycProduct::operator*=(const CycProduct& o) {
    scalar_ *= o.scalar_;
    qpow_ += o.qpow_;
    for (const auto& [d, e] : o.phis_) phis_[d] += e;
    canonicalize();
    return *this;
}

CycProduct& CycProduct::operator/=(const CycProduct& o) {
    if (o.scalar_ == 0) throw std::invalid_argument("CycProduct: division by zero");
    scalar_ /= o.scalar_;
    qpow_ -= o.qpow_;
    for (const auto& [d, e] : o.phis_) phis_[d] -= e;
    canonicalize();
    return *this;
}

namespace {

int moebius(unsigned n) {
    int mu = 1;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            mu = -mu;
        }
    }
    if (n > 1) mu = -mu;
    return mu;
}

}  // namespace

CycProduct CycProduct::inflate(unsigned j) const {
    if (j == 0) throw std::invalid_argument("inflate: j >= 1 required");
    if (j == 1) return *this;
    CycProduct out(scalar_);
    out.qpow_ = qpow_ * static_cast<long>(j);
    for (const auto& [d, e] : phis_) {
        // Phi_d(q^j) = prod_{dd | d} (q^{j dd} - 1)^{mu(d/dd)}, Moebius over the
        // divisor lattice of d.
        CycProduct factor = CycProduct::one();
        for (unsigned dd = 1; dd <= d; ++dd) {
            if (d % dd != 0) continue;
            int mu = moebius(d / dd);
            if (mu == 1)
                factor *= q_pow_minus_one(dd * j);
            else if (mu == -1)
                factor /= q_pow_minus_one(dd * j);
        }
        for (long rep = 0; rep < (e > 0 ? e : -e); ++rep) {
            if (e > 0)
                out *= factor;
            else
                out /= factor;
        }
    }
    out.canonicalize();
    return out;
}

CycProduct CycProduct::negate_q() const {
    CycProduct out;
    out.scalar_ = abs(scalar_);
    out.qpow_ = qpow_;
    for (const auto& [d, e] : phis_) {
        unsigned img;
        if (d == 1)
            img = 2;
        else if (d == 2)
            img = 1;
        else if (d % 2 == 1)
            img = 2 * d;
        else if (d % 4 == 2)
            img = d / 2;
        else
            img = d;
        out.phis_[img] += e;
    }
    out.canonicalize();
    return out;
}

Rat CycProduct::eval(const Int& q) const {
    if (q < 2) throw std::invalid_argument("CycProduct::eval: q >= 2 required");
    Rat acc = scalar_;
    if (qpow_ != 0) {
        Int p;
        mpz_pow_ui(p.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(qpow_ > 0 ? qpow_ : -qpow_));
        if (qpow_ > 0)
            acc *= Rat(p);
        else
            acc /= Rat(p);
    }
    for (const auto& [d, e] : phis_) {
        Int base = cyclotomic_at(d, q);
        Int p;
        mpz_pow_ui(p.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e > 0 ? e : -e));
        if (e > 0)
            acc *= Rat(p);
        else
            acc /= Rat(p);
    }
    acc.canonicalize();
    return acc;
}

Int CycProduct::eval_integer(const Int& q) const {
    Rat v = eval(q);
    if (v.get_den() != 1) throw std::runtime_error("CycProduct: non-integral evaluation of " + to_string());
    return v.get_num();
}

long CycProduct::v2_at(const Int& q) const {
    if (q < 3 || q % 2 == 0) throw std::invalid_argument("v2_at: odd q >= 3 required");
    if (scalar_ == 0) throw std::invalid_argument("v2_at: zero product");
    long acc = v2(scalar_.get_num()) - v2(scalar_.get_den());
    for (const auto& [d, e] : phis_) acc += e * v2_cyclotomic_at(d, q);
    return acc;
}

void CycProduct::require_effective(const char* what) const {
    if (scalar_ <= 0) throw std::runtime_error(std::string(what) + ": scalar not positive in " + to_string());
    if (qpow_ < 0) throw std::runtime_error(std::string(what) + ": negative q-power in " + to_string());
    for (const auto& [d, e] : phis_)
        if (e < 0) throw std::runtime_error(std::string(what) + ": negative Phi exponent in " + to_string());
}

std::string CycProduct::to_string() const {
    std::ostringstream os;
    os << scalar_;
    if (qpow_ != 0) os << " * q^" << qpow_;
    if (!phis_.empty()) {
        os << " *";
        for (const auto& [d, e] : phis_) {
            os << " F" << d;
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

std::string CycProduct::to_structured() const {
    nlohmann::json j;
    j["scalar"] = {scalar_.get_num().get_str(), scalar_.get_den().get_str()};
    j["qpow"] = qpow_;
    nlohmann::json phis = nlohmann::json::object();
    for (const auto& [d, e] : phis_) phis[std::to_string(d)] = e;
    j["phis"] = phis;
    return j.dump();
}

CycProduct CycProduct::from_structured(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    Rat scalar(Int(j.at("scalar").at(0).get<std::string>()), Int(j.at("scalar").at(1).get<std::string>()));
    scalar.canonicalize();
    std::map<unsigned, long> phis;
    for (auto& [key, val] : j.at("phis").items()) phis[static_cast<unsigned>(std::stoul(key))] = val.get<long>();
    return CycProduct(scalar, j.at("qpow").get<long>(), std::move(phis));
}

}  // namespace blockcheck
