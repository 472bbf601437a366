#include "blockcheck/partitions.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "blockcheck/liedata.hpp"

namespace blockcheck {

Partition::Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i + 1 < parts_.size(); ++i)
        if (parts_[i] < parts_[i + 1]) throw std::invalid_argument("Partition: parts must be weakly decreasing");
    for (unsigned p : parts_) {
        if (p == 0) throw std::invalid_argument("Partition: zero part");
        size_ += p;
    }
}

std::vector<unsigned> Partition::hooks() const {
    // hook(i,j) = (arm) + (leg) + 1 = parts[i]-j + #(rows below with part > j) .
    std::vector<unsigned> out;
    Partition conj = conjugate();
    const auto& cp = conj.parts();
    for (size_t i = 0; i < parts_.size(); ++i)
        for (unsigned j = 0; j < parts_[i]; ++j)
            out.push_back(parts_[i] - j + cp[j] - static_cast<unsigned>(i) - 1);
    std::sort(out.rbegin(), out.rend());
    return out;
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return Partition();
    std::vector<unsigned> conj(parts_[0], 0);
    for (unsigned p : parts_)
        for (unsigned j = 0; j < p; ++j) ++conj[j];
    return Partition(std::move(conj));
}

std::string Partition::to_string() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
    os << ")";
    return os.str();
}

std::vector<Partition> partitions_of(unsigned n) {
    std::vector<Partition> out;
    std::vector<unsigned> cur;
    std::function<void(unsigned, unsigned)> rec = [&](unsigned rem, unsigned maxpart) {
        if (rem == 0) {
            out.emplace_back(cur);
            return;
        }
        for (unsigned p = std::min(rem, maxpart); p >= 1; --p) {
            cur.push_back(p);
            rec(rem - p, p);
            cur.pop_back();
        }
    };
    rec(n, n == 0 ? 1 : n);
    return out;
}

CycProduct degree_type_a(const Partition& p, bool twisted) {
    if (p.size() == 0) throw std::invalid_argument("degree_type_a: empty partition");
    unsigned l = p.size() - 1;
    if (l == 0) return CycProduct::one();  // A_0 is trivial
    LieSeries series{twisted ? LieFamily::TwoA : LieFamily::A, l};
    CycProduct num = order_rprime(series);
    num *= twisted ? CycProduct::q_pow_plus_one(1) : CycProduct::q_pow_minus_one(1);
    CycProduct den = CycProduct::one();
    for (unsigned h : p.hooks()) {
        if (!twisted) {
            den *= CycProduct::q_pow_minus_one(h);
        } else {
            // |(-q)^h - 1| = q^h - 1 for even h, q^h + 1 for odd h.
            den *= (h % 2 == 0) ? CycProduct::q_pow_minus_one(h) : CycProduct::q_pow_plus_one(h);
        }
    }
    CycProduct deg = num / den;
    deg.require_effective("degree_type_a");
    return deg;
}

long defect_type_a(const Partition& p, const Int& q, bool twisted) {
    if (q < 3 || q % 2 == 0) throw std::invalid_argument("defect_type_a: odd q >= 3 required");
    CycProduct den = CycProduct::one();
    for (unsigned h : p.hooks())
        den *= (!twisted || h % 2 == 0) ? CycProduct::q_pow_minus_one(h) : CycProduct::q_pow_plus_one(h);
    den /= twisted ? CycProduct::q_pow_plus_one(1) : CycProduct::q_pow_minus_one(1);
    return den.v2_at(q);
}

}  // namespace blockcheck
