#include "blockcheck/cyclotomic_poly.hpp"

#include <functional>
#include <map>
#include <mutex>

namespace blockcheck {

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
    if (a.empty() || b.empty()) return {};
    IntPoly c(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    }
    return c;
}

IntPoly poly_divexact(const IntPoly& num, const IntPoly& den) {
    if (den.empty() || den.back() == 0) throw std::invalid_argument("poly_divexact: bad divisor");
    IntPoly rem = num;
    while (!rem.empty() && rem.back() == 0) rem.pop_back();
    if (rem.size() < den.size()) {
        if (rem.empty()) return {};
        throw std::runtime_error("poly_divexact: degree underflow");
    }
    IntPoly quot(rem.size() - den.size() + 1, Int(0));
    for (size_t k = quot.size(); k-- > 0;) {
        Int lead = rem[k + den.size() - 1];
        if (lead % den.back() != 0) throw std::runtime_error("poly_divexact: inexact division");
        Int c = lead / den.back();
        quot[k] = c;
        if (c == 0) continue;
        for (size_t j = 0; j < den.size(); ++j) rem[k + j] -= c * den[j];
    }
    for (const Int& r : rem)
        if (r != 0) throw std::runtime_error("poly_divexact: nonzero remainder");
    return quot;
}

Int poly_eval(const IntPoly& p, const Int& x) {
    Int acc = 0;
    for (size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
    return acc;
}

const IntPoly& cyclotomic_poly(unsigned d) {
    if (d == 0) throw std::invalid_argument("cyclotomic_poly: d must be >= 1");
    static std::map<unsigned, IntPoly> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;

    // x^d - 1 divided by the product of Phi_e over proper divisors e of d.
    std::function<const IntPoly&(unsigned)> get = [&](unsigned n) -> const IntPoly& {
        auto hit = cache.find(n);
        if (hit != cache.end()) return hit->second;
        IntPoly num(n + 1, Int(0));
        num[0] = -1;
        num[n] = 1;
        IntPoly den{Int(1)};
        for (unsigned e = 1; e < n; ++e)
            if (n % e == 0) den = poly_mul(den, get(e));
        return cache.emplace(n, poly_divexact(num, den)).first->second;
    };
    return get(d);
}

Int cyclotomic_at(unsigned d, const Int& q) { return poly_eval(cyclotomic_poly(d), q); }

long v2_cyclotomic_at(unsigned d, const Int& q) {
    static std::map<std::pair<unsigned, long>, long> cache;
    static std::mutex mtx;
    if (q.fits_slong_p()) {
        std::lock_guard<std::mutex> lock(mtx);
        auto key = std::make_pair(d, q.get_si());
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
        long v = v2(cyclotomic_at(d, q));
        cache.emplace(key, v);
        return v;
    }
    return v2(cyclotomic_at(d, q));
}

}  // namespace blockcheck
