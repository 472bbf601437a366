#include "blockcheck/cyclotomic_int.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "blockcheck/cyclotomic_poly.hpp"

namespace blockcheck {

unsigned euler_phi(unsigned e) {
    unsigned result = e, n = e;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            result -= result / p;
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

const std::vector<std::vector<long long>>& power_basis_table(unsigned e) {
    static std::map<unsigned, std::vector<std::vector<long long>>> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(e);
    if (it != cache.end()) return it->second;

    unsigned deg = euler_phi(e);
    const IntPoly& phi = cyclotomic_poly(e);
    std::vector<std::vector<long long>> table(e, std::vector<long long>(deg, 0));
    // z^m for m < deg is a basis monomial; beyond that, reduce using
    // z^deg = -(phi[deg-1] z^{deg-1} + ... + phi[0]).
    for (unsigned m = 0; m < e; ++m) {
        if (m < deg) {
            table[m][m] = 1;
            continue;
        }
        const std::vector<long long>& prev = table[m - 1];
        std::vector<long long> cur(deg, 0);
        // multiply prev by z
        long long top = prev[deg - 1];
        for (unsigned i = deg - 1; i >= 1; --i) cur[i] = prev[i - 1];
        cur[0] = 0;
        if (top != 0) {
            for (unsigned i = 0; i < deg; ++i) {
                Int c = phi[i];
                if (!c.fits_slong_p()) throw std::logic_error("power_basis_table: coefficient overflow");
                cur[i] -= top * c.get_si();
            }
        }
        table[m] = std::move(cur);
    }
    return cache.emplace(e, std::move(table)).first->second;
}

CycInt::CycInt(unsigned conductor) : conductor_(conductor), coeffs_(euler_phi(conductor), 0) {
    if (conductor == 0) throw std::invalid_argument("CycInt: conductor must be >= 1");
}

CycInt::CycInt(unsigned conductor, long long rational) : CycInt(conductor) { coeffs_[0] = rational; }

CycInt CycInt::root_power(unsigned conductor, unsigned k) {
    CycInt out(conductor);
    const auto& tab = power_basis_table(conductor);
    out.coeffs_ = tab[k % conductor];
    return out;
}

bool CycInt::is_zero() const {
    for (long long c : coeffs_)
        if (c != 0) return false;
    return true;
}

bool CycInt::is_rational() const {
    for (size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

long long CycInt::rational_value() const {
    if (!is_rational()) throw std::logic_error("CycInt: not rational: " + to_string());
    return coeffs_[0];
}

CycInt CycInt::operator+(const CycInt& o) const {
    match(o);
    CycInt out(conductor_);
    for (size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] = coeffs_[i] + o.coeffs_[i];
    return out;
}

CycInt CycInt::operator-(const CycInt& o) const {
    match(o);
    CycInt out(conductor_);
    for (size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] = coeffs_[i] - o.coeffs_[i];
    return out;
}

CycInt CycInt::operator-() const {
    CycInt out(conductor_);
    for (size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] = -coeffs_[i];
    return out;
}

CycInt CycInt::operator*(const CycInt& o) const {
    match(o);
    unsigned deg = static_cast<unsigned>(coeffs_.size());
    std::vector<long long> conv(2 * deg, 0);
    for (unsigned i = 0; i < deg; ++i) {
        if (coeffs_[i] == 0) continue;
        for (unsigned j = 0; j < deg; ++j) conv[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    const auto& tab = power_basis_table(conductor_);
    CycInt out(conductor_);
    for (unsigned m = 0; m < 2 * deg; ++m) {
        if (conv[m] == 0) continue;
        const auto& rep = tab[m % conductor_];
        for (unsigned i = 0; i < deg; ++i) out.coeffs_[i] += conv[m] * rep[i];
    }
    return out;
}

bool CycInt::operator==(const CycInt& o) const { return conductor_ == o.conductor_ && coeffs_ == o.coeffs_; }

CycInt CycInt::galois(unsigned j) const {
    if (std::gcd(j % conductor_, conductor_) != 1) throw std::invalid_argument("CycInt::galois: j not coprime");
    const auto& tab = power_basis_table(conductor_);
    CycInt out(conductor_);
    for (unsigned m = 0; m < coeffs_.size(); ++m) {
        if (coeffs_[m] == 0) continue;
        const auto& rep = tab[(static_cast<uint64_t>(m) * j) % conductor_];
        for (size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] += coeffs_[m] * rep[i];
    }
    return out;
}

CycInt CycInt::conjugate() const { return galois(conductor_ - 1); }

CycInt CycInt::embed(unsigned new_conductor) const {
    if (new_conductor % conductor_ != 0) throw std::invalid_argument("CycInt::embed: conductor must divide target");
    unsigned scale = new_conductor / conductor_;
    const auto& tab = power_basis_table(new_conductor);
    CycInt out(new_conductor);
    for (unsigned m = 0; m < coeffs_.size(); ++m) {
        if (coeffs_[m] == 0) continue;
        const auto& rep = tab[(static_cast<uint64_t>(m) * scale) % new_conductor];
        for (size_t i = 0; i < out.coeffs_.size(); ++i) out.coeffs_[i] += coeffs_[m] * rep[i];
    }
    return out;
}

bool CycInt::divisible_by(long long n) const {
    if (n == 0) throw std::invalid_argument("CycInt::divisible_by: zero");
    for (long long c : coeffs_)
        if (c % n != 0) return false;
    return true;
}

std::string CycInt::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        if (!first) os << (coeffs_[i] > 0 ? "+" : "");
        os << coeffs_[i];
        if (i > 0) os << "*z" << conductor_ << "^" << i;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace blockcheck
