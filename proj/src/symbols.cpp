#include "blockcheck/symbols.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace blockcheck {

namespace {

bool strictly_decreasing(const std::vector<unsigned>& v) {
    for (size_t i = 0; i + 1 < v.size(); ++i)
        if (v[i] <= v[i + 1]) return false;
    return true;
}

bool contains(const std::vector<unsigned>& v, unsigned x) {
    return std::find(v.begin(), v.end(), x) != v.end();
}

unsigned intersection_size(const std::vector<unsigned>& a, const std::vector<unsigned>& b) {
    unsigned n = 0;
    for (unsigned x : a)
        if (contains(b, x)) ++n;
    return n;
}

long entry_sum(const std::vector<unsigned>& v) {
    long s = 0;
    for (unsigned x : v) s += x;
    return s;
}

}  // namespace

Symbol::Symbol(std::vector<unsigned> x, std::vector<unsigned> y) : x_(std::move(x)), y_(std::move(y)) {
    if (!strictly_decreasing(x_) || !strictly_decreasing(y_))
        throw std::invalid_argument("Symbol: rows must be strictly decreasing");
}

Symbol Symbol::shifted() const {
    std::vector<unsigned> nx, ny;
    nx.reserve(x_.size() + 1);
    ny.reserve(y_.size() + 1);
    for (unsigned v : x_) nx.push_back(v + 1);
    nx.push_back(0);
    for (unsigned v : y_) ny.push_back(v + 1);
    ny.push_back(0);
    return Symbol(std::move(nx), std::move(ny));
}

Symbol Symbol::reduced() const {
    std::vector<unsigned> x = x_, y = y_;
    while (!x.empty() && !y.empty() && x.back() == 0 && y.back() == 0) {
        x.pop_back();
        y.pop_back();
        for (unsigned& v : x) --v;
        for (unsigned& v : y) --v;
    }
    if (x.size() < y.size() || (x.size() == y.size() && y < x)) std::swap(x, y);
    return Symbol(std::move(x), std::move(y));
}

unsigned Symbol::rank() const {
    long kr = static_cast<long>(k() + r());
    if (kr == 0) return 0;
    long sq = ((kr - 1) * (kr - 1)) / 4;  // floor(((k+r-1)/2)^2)
    long rk = entry_sum(x_) + entry_sum(y_) - sq;
    if (rk < 0) throw std::logic_error("Symbol::rank: negative");
    return static_cast<unsigned>(rk);
}

unsigned Symbol::c_value() const {
    if (x_ == y_) return 0;
    long kr = static_cast<long>(k() + r());
    long c = (kr - 1) / 2 - static_cast<long>(intersection_size(x_, y_));
    if (c < 0) throw std::logic_error("Symbol::c_value: negative");
    return static_cast<unsigned>(c);
}

std::vector<unsigned> Symbol::hook_list() const {
    std::vector<unsigned> out;
    for (const auto* row : {&x_, &y_}) {
        for (unsigned z : *row)
            for (unsigned zp = 0; zp < z; ++zp)
                if (!contains(*row, zp)) out.push_back(z - zp);
    }
    std::sort(out.rbegin(), out.rend());
    return out;
}

std::vector<unsigned> Symbol::cohook_list() const {
    std::vector<unsigned> out;
    for (unsigned z : x_)
        for (unsigned zp = 0; zp < z; ++zp)
            if (!contains(y_, zp)) out.push_back(z - zp);
    for (unsigned z : y_)
        for (unsigned zp = 0; zp < z; ++zp)
            if (!contains(x_, zp)) out.push_back(z - zp);
    std::sort(out.rbegin(), out.rend());
    return out;
}

long Symbol::h_plus() const {
    long kk = static_cast<long>(k()), rr = static_cast<long>(r());
    return entry_sum(x_) + entry_sum(y_) - kk * (kk - 1) / 2 - rr * (rr - 1) / 2;
}

long Symbol::h_minus() const {
    long kk = static_cast<long>(k()), rr = static_cast<long>(r());
    return entry_sum(x_) + entry_sum(y_) - kk * rr + intersection_size(x_, y_);
}

long Symbol::identity_check() const {
    long v = static_cast<long>(c_value()) + h_plus() + h_minus() - 2 * static_cast<long>(rank());
    bool odd_or_equal = (defect() % 2 != 0) || degenerate();
    long expected = odd_or_equal ? 0 : -1;
    if (v != expected) throw std::logic_error("Symbol identity violated for " + to_string());
    return v;
}

std::string Symbol::to_string() const {
    auto row = [](const std::vector<unsigned>& v) {
        std::ostringstream os;
        os << "{";
        for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
        os << "}";
        return os.str();
    };
    return "[" + row(x_) + "," + row(y_) + "]";
}

CycProduct degree_bcd(const Symbol& s, LieFamily family, long expected_rank) {
    unsigned l = s.rank();
    if (expected_rank >= 0 && static_cast<unsigned>(expected_rank) != l)
        throw std::invalid_argument("degree_bcd: symbol rank " + std::to_string(l) + " does not match rank " +
                                    std::to_string(expected_rank));
    long defect = s.defect() >= 0 ? s.defect() : -s.defect();
    switch (family) {
        case LieFamily::B:
        case LieFamily::C:
            if (defect % 2 != 1) throw std::invalid_argument("degree_bcd: B/C needs odd defect");
            break;
        case LieFamily::D:
            if (defect % 4 != 0) throw std::invalid_argument("degree_bcd: D needs defect 0 mod 4");
            break;
        case LieFamily::TwoD:
            if (defect % 4 != 2) throw std::invalid_argument("degree_bcd: 2D needs defect 2 mod 4");
            break;
        default:
            throw std::invalid_argument("degree_bcd: family must be B, C, D or 2D");
    }
    if (l < 1) throw std::invalid_argument("degree_bcd: rank 0 symbol");
    LieSeries series{family, l};
    CycProduct den(Rat(Int(1) << s.c_value()));
    for (unsigned h : s.hook_list()) den *= CycProduct::q_pow_minus_one(h);
    for (unsigned h : s.cohook_list()) den *= CycProduct::q_pow_plus_one(h);
    CycProduct deg = order_rprime(series) / den;
    deg.require_effective("degree_bcd");
    for (long q : {3L, 5L}) {
        if (deg.eval(Int(q)).get_den() != 1)
            throw std::logic_error("degree_bcd: non-integral degree for " + s.to_string());
    }
    return deg;
}

long defect_bcd(const Symbol& s, const Int& q) {
    if (q < 3 || q % 2 == 0) throw std::invalid_argument("defect_bcd: odd q >= 3 required");
    CycProduct den(Rat(Int(1) << s.c_value()));
    for (unsigned h : s.hook_list()) den *= CycProduct::q_pow_minus_one(h);
    for (unsigned h : s.cohook_list()) den *= CycProduct::q_pow_plus_one(h);
    return den.v2_at(q);
}

std::vector<Symbol> enumerate_symbols(unsigned rank, unsigned parity, unsigned max_k_plus_r) {
    std::vector<Symbol> out;
    // Strictly decreasing sequences of the given size and entry sum.
    std::function<void(unsigned, long, unsigned, std::vector<unsigned>&,
                       const std::function<void(const std::vector<unsigned>&)>&)>
        gen = [&](unsigned size, long sum, unsigned maxentry, std::vector<unsigned>& cur,
                  const std::function<void(const std::vector<unsigned>&)>& emit) {
            if (size == 0) {
                if (sum == 0) emit(cur);
                return;
            }
            long minrest = static_cast<long>(size - 1) * (size - 2) / 2;  // 0+1+...+(size-2)
            for (long e = static_cast<long>(size) - 1; e <= static_cast<long>(maxentry); ++e) {
                if (sum - e < minrest) break;
                cur.push_back(static_cast<unsigned>(e));
                gen(size - 1, sum - e, e > 0 ? static_cast<unsigned>(e - 1) : 0, cur, emit);
                cur.pop_back();
            }
        };

    for (unsigned d = parity % 2;; d += 2) {
        // Minimal possible rank for defect d is floor((d/2)^2) (the reduced
        // symbol {d-1,...,1,0} / {}), so large defects cannot reach the rank.
        unsigned min_rank = (d / 2) * (d / 2);
        if (d % 2 == 1) min_rank = (d * d - 1) / 4;
        if (min_rank > rank) break;
        for (unsigned r = 0;; ++r) {
            unsigned k = r + d;
            if (k + r > max_k_plus_r) break;
            long kr = static_cast<long>(k + r);
            long sq = (kr == 0) ? 0 : ((kr - 1) * (kr - 1)) / 4;
            long total = static_cast<long>(rank) + sq;
            // Minimal entry sum of a reduced pair: zero allowed in the X row only.
            long min_reduced = static_cast<long>(k) * (k - 1) / 2 + static_cast<long>(r) * (r + 1) / 2;
            if (min_reduced > total) break;
            long min_x = static_cast<long>(k) * (k - 1) / 2;
            long min_y = static_cast<long>(r) * (r - 1) / 2;
            for (long sx = min_x; sx <= total - min_y; ++sx) {
                std::vector<unsigned> xs;
                gen(k, sx, static_cast<unsigned>(sx), xs, [&](const std::vector<unsigned>& xdone) {
                    std::vector<unsigned> ys;
                    std::vector<unsigned> xcopy = xdone;
                    gen(r, total - sx, static_cast<unsigned>(total - sx < 0 ? 0 : total - sx), ys,
                        [&](const std::vector<unsigned>& ydone) {
                            // reduced: not both rows contain 0
                            bool x0 = !xcopy.empty() && xcopy.back() == 0;
                            bool y0 = !ydone.empty() && ydone.back() == 0;
                            if (x0 && y0) return;
                            if (d == 0) {
                                // swap-canonical: X <= Y lexicographically
                                if (ydone < xcopy) return;
                            }
                            Symbol s(xcopy, ydone);
                            if (s.rank() != rank) return;
                            out.push_back(std::move(s));
                        });
                });
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

DefectScanResult min_defect_scan(LieFamily family, unsigned rank, const Int& q) {
    DefectScanResult res;
    res.min_defect = -1;
    auto consider = [&res](std::string label, CycProduct deg, long defect) {
        if (res.min_defect < 0 || defect < res.min_defect) {
            res.min_defect = defect;
            res.witness = label;
        }
        res.entries.push_back({std::move(label), std::move(deg), defect});
    };
    switch (family) {
        case LieFamily::A:
        case LieFamily::TwoA: {
            bool tw = family == LieFamily::TwoA;
            for (const Partition& p : partitions_of(rank + 1))
                consider(p.to_string(), degree_type_a(p, tw), defect_type_a(p, q, tw));
            break;
        }
        case LieFamily::B:
        case LieFamily::C: {
            for (const Symbol& s : enumerate_symbols(rank, 1))
                consider(s.to_string(), degree_bcd(s, family), defect_bcd(s, q));
            break;
        }
        case LieFamily::D:
        case LieFamily::TwoD: {
            unsigned want = family == LieFamily::D ? 0 : 2;
            for (const Symbol& s : enumerate_symbols(rank, 0)) {
                long d = s.defect() >= 0 ? s.defect() : -s.defect();
                if (static_cast<unsigned>(d % 4) != want) continue;
                consider(s.to_string(), degree_bcd(s, family), defect_bcd(s, q));
            }
            break;
        }
        default:
            throw std::invalid_argument("min_defect_scan: classical family required");
    }
    if (res.min_defect < 0) throw std::logic_error("min_defect_scan: empty scan");
    return res;
}

}  // namespace blockcheck
