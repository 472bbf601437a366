#include "blockcheck/char_table.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace blockcheck {

namespace {

using u64 = uint64_t;

u64 powmod(u64 a, u64 e, u64 p) {
    u64 r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = (static_cast<unsigned __int128>(r) * a) % p;
        a = (static_cast<unsigned __int128>(a) * a) % p;
        e >>= 1;
    }
    return r;
}

u64 invmod(u64 a, u64 p) { return powmod(a % p, p - 2, p); }

struct Fp {
    u64 p;
    u64 add(u64 a, u64 b) const { return (a + b) % p; }
    u64 sub(u64 a, u64 b) const { return (a + p - b % p) % p; }
    u64 mul(u64 a, u64 b) const { return (static_cast<unsigned __int128>(a) * b) % p; }
};

using FpVec = std::vector<u64>;
using FpMat = std::vector<FpVec>;

// Reduced row echelon basis of the span of `rows`.
FpMat row_reduce(const Fp& f, FpMat rows) {
    size_t rr = 0;
    size_t n = rows.empty() ? 0 : rows[0].size();
    for (size_t c = 0; c < n && rr < rows.size(); ++c) {
        size_t piv = rr;
        while (piv < rows.size() && rows[piv][c] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[rr], rows[piv]);
        u64 s = invmod(rows[rr][c], f.p);
        for (size_t j = 0; j < n; ++j) rows[rr][j] = f.mul(rows[rr][j], s);
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i == rr || rows[i][c] == 0) continue;
            u64 t = rows[i][c];
            for (size_t j = 0; j < n; ++j) rows[i][j] = f.sub(rows[i][j], f.mul(t, rows[rr][j]));
        }
        ++rr;
    }
    rows.resize(rr);
    return rows;
}

// Kernel basis of a square matrix.
FpMat kernel_basis(const Fp& f, FpMat m) {
    size_t n = m.size();
    FpMat red = row_reduce(f, std::move(m));
    std::vector<int> pivot_col(red.size());
    std::vector<bool> is_pivot(n, false);
    for (size_t i = 0; i < red.size(); ++i) {
        size_t c = 0;
        while (c < n && red[i][c] == 0) ++c;
        pivot_col[i] = static_cast<int>(c);
        is_pivot[c] = true;
    }
    FpMat out;
    for (size_t free_c = 0; free_c < n; ++free_c) {
        if (is_pivot[free_c]) continue;
        FpVec v(n, 0);
        v[free_c] = 1;
        for (size_t i = 0; i < red.size(); ++i) v[pivot_col[i]] = f.sub(0, red[i][free_c]);
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace

long long CharacterTable::degree(size_t chi) const { return chars_[chi][0].rational_value(); }

std::vector<long long> CharacterTable::degrees() const {
    std::vector<long long> d;
    for (size_t i = 0; i < chars_.size(); ++i) d.push_back(degree(i));
    std::sort(d.begin(), d.end());
    return d;
}

Rat CharacterTable::inner_product(const std::vector<CycInt>& u, const std::vector<CycInt>& v) const {
    CycInt acc(conductor_);
    for (size_t j = 0; j < classes_.size(); ++j) {
        CycInt term = u[j] * v[j].conjugate();
        acc += term * CycInt(conductor_, classes_[j].size);
    }
    if (!acc.is_rational()) throw std::logic_error("inner_product: non-rational sum");
    Rat r(Int(static_cast<long>(acc.rational_value())), Int(static_cast<long>(group_order_)));
    r.canonicalize();
    return r;
}

Rat CharacterTable::inner_product_rows(size_t i, size_t j) const { return inner_product(chars_[i], chars_[j]); }

std::vector<CycInt> CharacterTable::combination(const std::vector<Int>& coeffs) const {
    if (coeffs.size() != chars_.size()) throw std::invalid_argument("combination: coefficient count mismatch");
    std::vector<CycInt> out(classes_.size(), CycInt(conductor_));
    for (size_t i = 0; i < chars_.size(); ++i) {
        if (coeffs[i] == 0) continue;
        if (!coeffs[i].fits_slong_p()) throw std::invalid_argument("combination: coefficient too large");
        CycInt c(conductor_, coeffs[i].get_si());
        for (size_t j = 0; j < classes_.size(); ++j) out[j] += c * chars_[i][j];
    }
    return out;
}

void CharacterTable::verify() const {
    size_t k = classes_.size();
    if (chars_.size() != k) throw std::logic_error("table: row count != class count");
    long long sumsq = 0;
    for (size_t i = 0; i < k; ++i) {
        long long d = degree(i);
        if (d <= 0) throw std::logic_error("table: nonpositive degree");
        if (group_order_ % d != 0) throw std::logic_error("table: degree does not divide group order");
        sumsq += d * d;
    }
    if (sumsq != static_cast<long long>(group_order_)) throw std::logic_error("table: sum of squares != |G|");
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < k; ++j) {
            Rat ip = inner_product_rows(i, j);
            if (ip != Rat(i == j ? 1 : 0)) throw std::logic_error("table: orthogonality failure");
        }
}

std::string CharacterTable::to_text() const {
    std::ostringstream os;
    os << group_name_ << ": " << classes_.size() << " classes\n";
    os << "class sizes:";
    for (const auto& c : classes_) os << " " << c.size;
    os << "\nelement orders:";
    for (const auto& c : classes_) os << " " << c.element_order;
    os << "\n";
    for (size_t i = 0; i < chars_.size(); ++i) {
        os << "chi" << (i + 1) << ":";
        for (size_t j = 0; j < classes_.size(); ++j) os << " " << chars_[i][j].to_string();
        os << "\n";
    }
    return os.str();
}

std::string CharacterTable::to_json() const {
    nlohmann::json j;
    j["group"] = group_name_;
    j["order"] = group_order_;
    j["conductor"] = conductor_;
    nlohmann::json cls = nlohmann::json::array();
    for (const auto& c : classes_)
        cls.push_back({{"order", c.element_order}, {"size", c.size}, {"regular", c.two_regular}});
    j["classes"] = cls;
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : chars_) {
        nlohmann::json r = nlohmann::json::array();
        for (const CycInt& v : row) r.push_back(v.coeffs());
        rows.push_back(r);
    }
    j["chars"] = rows;
    return j.dump();
}

CharacterTable character_table(const FiniteGroup& g) {
    if (g.order() > 10000) throw std::invalid_argument("character_table: group too large");
    const auto& classes = g.conjugacy_classes();
    size_t k = classes.size();
    unsigned e = g.exponent();

    // Class data in table order.
    std::vector<TableClass> tclasses;
    for (const auto& c : classes)
        tclasses.push_back({c.rep, static_cast<unsigned>(c.members.size()), c.element_order,
                            c.element_order % 2 == 1});

    // Structure constants a[i][j][l] = #{x in K_i : x^{-1} g_l in K_j}.
    std::vector<std::vector<std::vector<u64>>> a(
        k, std::vector<std::vector<u64>>(k, std::vector<u64>(k, 0)));
    for (size_t l = 0; l < k; ++l) {
        int gl = classes[l].rep;
        for (size_t i = 0; i < k; ++i)
            for (int x : classes[i].members) {
                int y = g.mul(g.inv(x), gl);
                a[i][g.class_of(y)][l] += 1;
            }
    }

    // Inverse-class map and power-class maps.
    std::vector<size_t> inv_class(k);
    for (size_t j = 0; j < k; ++j) inv_class[j] = g.class_of(g.inv(classes[j].rep));

    // Splitting prime: smallest p = 1 mod e, p > 2 sqrt(|G|), p coprime to |G|.
    auto next_prime = [&](u64 from) {
        u64 p = from + e - (from % e == 0 ? e : from % e) + 1;  // smallest > from with p = 1 mod e
        while (true) {
            if (is_prime(Int(static_cast<unsigned long>(p))) && g.order() % p != 0) return p;
            p += e;
        }
    };
    u64 bound = 1;
    while (bound * bound <= 4 * g.order()) ++bound;

    for (u64 p = next_prime(bound);; p = next_prime(p)) {
        Fp f{p};
        // Common eigenvectors of the class matrices M_i[j][l] = a[i][j][l].
        std::vector<FpMat> spaces{FpMat{}};
        spaces[0] = FpMat(k);
        for (size_t j = 0; j < k; ++j) {
            spaces[0][j] = FpVec(k, 0);
            spaces[0][j][j] = 1;
        }
        for (size_t i = 1; i < k; ++i) {
            std::vector<FpMat> next;
            for (FpMat& sp : spaces) {
                if (sp.size() <= 1) {
                    next.push_back(std::move(sp));
                    continue;
                }
                size_t dim = sp.size();
                size_t n = k;
                // Work in a row-reduced basis of the subspace.
                FpMat red = row_reduce(f, sp);
                std::vector<int> piv(red.size());
                for (size_t rr = 0; rr < red.size(); ++rr) {
                    size_t c = 0;
                    while (c < n && red[rr][c] == 0) ++c;
                    piv[rr] = static_cast<int>(c);
                }
                auto coords = [&](const FpVec& v) {
                    FpVec rem = v, out(dim, 0);
                    for (size_t rr = 0; rr < red.size(); ++rr) {
                        u64 c = rem[piv[rr]];
                        out[rr] = c;
                        if (c != 0)
                            for (size_t j2 = 0; j2 < n; ++j2) rem[j2] = f.sub(rem[j2], f.mul(c, red[rr][j2]));
                    }
                    for (u64 x : rem)
                        if (x != 0) throw std::logic_error("character_table: image left the subspace");
                    return out;
                };
                // Restriction matrix in red-coordinates.
                FpMat rimages(dim, FpVec(dim, 0));
                for (size_t b = 0; b < dim; ++b) {
                    // image of red[b] under M_i
                    FpVec img(k, 0);
                    for (size_t row = 0; row < k; ++row) {
                        u64 acc = 0;
                        for (size_t l = 0; l < k; ++l)
                            acc = f.add(acc, f.mul(a[i][row][l] % p, red[b][l]));
                        img[row] = acc;
                    }
                    rimages[b] = coords(img);
                }
                // Eigenvalues: scan roots of det(R - t I) by testing nullity.
                std::vector<bool> used(dim, false);
                bool split_any = false;
                for (u64 lam = 0; lam < p; ++lam) {
                    // Eigen-coordinates solve x^T R = lam x^T with R[b][c] the
                    // red-coordinates of M_i(red[b]); take the kernel of the
                    // transposed shift.
                    FpMat shifted(dim, FpVec(dim, 0));
                    for (size_t r1 = 0; r1 < dim; ++r1)
                        for (size_t c1 = 0; c1 < dim; ++c1)
                            shifted[r1][c1] = f.sub(rimages[c1][r1], (r1 == c1) ? lam : 0);
                    FpMat ker = kernel_basis(f, shifted);
                    if (ker.empty()) continue;
                    split_any = true;
                    FpMat sub;
                    for (const FpVec& kv : ker) {
                        FpVec vec(k, 0);
                        for (size_t b = 0; b < dim; ++b)
                            if (kv[b] != 0)
                                for (size_t j2 = 0; j2 < k; ++j2)
                                    vec[j2] = f.add(vec[j2], f.mul(kv[b], red[b][j2]));
                        sub.push_back(std::move(vec));
                    }
                    next.push_back(std::move(sub));
                }
                if (!split_any) next.push_back(red);
            }
            spaces = std::move(next);
        }

        bool all_one = true;
        for (const FpMat& sp : spaces)
            if (sp.size() != 1) all_one = false;
        if (!all_one || spaces.size() != k) continue;  // retry with a larger prime

        // Central characters: normalise so the identity-class coordinate is 1.
        size_t id_class = 0;  // classes are sorted with identity first
        std::vector<FpVec> omegas;
        for (const FpMat& sp : spaces) {
            FpVec w = sp[0];
            if (w[id_class] == 0) throw std::logic_error("character_table: eigenvector vanishes at identity");
            u64 s = invmod(w[id_class], p);
            for (u64& x : w) x = f.mul(x, s);
            omegas.push_back(std::move(w));
        }

        // Degrees: chi(1)^2 = |G| / sum_j w_j w_{j*} / |K_j|.
        std::vector<u64> degs(k, 0);
        bool ok = true;
        for (size_t s = 0; s < k && ok; ++s) {
            u64 denom = 0;
            for (size_t j = 0; j < k; ++j) {
                u64 t = f.mul(omegas[s][j], omegas[s][inv_class[j]]);
                denom = f.add(denom, f.mul(t, invmod(classes[j].members.size() % p, p)));
            }
            if (denom == 0) {
                ok = false;
                break;
            }
            u64 dsq = f.mul(g.order() % p, invmod(denom, p));
            u64 root = 0;
            for (u64 t = 1; t <= p / 2; ++t)
                if (f.mul(t, t) == dsq) {
                    root = t;
                    break;
                }
            if (root == 0) {
                ok = false;
                break;
            }
            degs[s] = root;
        }
        if (!ok) continue;

        // Root of unity of order e in F_p.
        u64 z = 0;
        for (u64 gcand = 2; gcand < p; ++gcand) {
            bool generator = true;
            for (const Int& pf : prime_factors(Int(static_cast<unsigned long>(p - 1))))
                if (powmod(gcand, (p - 1) / pf.get_ui(), p) == 1) {
                    generator = false;
                    break;
                }
            if (generator) {
                z = powmod(gcand, (p - 1) / e, p);
                break;
            }
        }
        if (z == 0) continue;

        // chi(g_j) mod p, then exact lift via eigenvalue multiplicities.
        CharacterTable table;
        table.group_order_ = g.order();
        table.group_name_ = g.name();
        table.conductor_ = e;
        table.classes_ = tclasses;
        table.chars_.assign(k, std::vector<CycInt>(k, CycInt(e)));

        // power-class map per class
        std::vector<std::vector<size_t>> pc(k);
        for (size_t j = 0; j < k; ++j) {
            unsigned m = classes[j].element_order;
            pc[j].resize(m);
            int x = g.identity();
            for (unsigned u = 0; u < m; ++u) {
                pc[j][u] = g.class_of(x);
                x = g.mul(x, classes[j].rep);
            }
        }

        bool lifted = true;
        for (size_t s = 0; s < k && lifted; ++s) {
            std::vector<u64> chi(k);
            for (size_t j = 0; j < k; ++j)
                chi[j] = f.mul(omegas[s][j],
                               f.mul(degs[s], invmod(classes[j].members.size() % p, p)));
            for (size_t j = 0; j < k; ++j) {
                unsigned m = classes[j].element_order;
                u64 zm = powmod(z, e / m, p);  // order-m root
                u64 minv = invmod(m % p, p);
                CycInt val(e);
                u64 total = 0;
                for (unsigned t = 0; t < m; ++t) {
                    u64 acc = 0;
                    for (unsigned u = 0; u < m; ++u) {
                        u64 term = f.mul(chi[pc[j][u]], powmod(zm, (static_cast<u64>(m) - t) * u % m, p));
                        acc = f.add(acc, term);
                    }
                    u64 mult = f.mul(acc, minv);
                    if (mult > degs[s]) {  // multiplicities must lie in [0, chi(1)]
                        lifted = false;
                        break;
                    }
                    total += mult;
                    if (mult != 0) val += CycInt::root_power(e, t * (e / m)) * CycInt(e, static_cast<long long>(mult));
                }
                if (!lifted || total != degs[s]) {
                    lifted = false;
                    break;
                }
                table.chars_[s][j] = val;
            }
        }
        if (!lifted) continue;

        std::sort(table.chars_.begin(), table.chars_.end(),
                  [](const std::vector<CycInt>& x, const std::vector<CycInt>& y) {
                      if (x[0].rational_value() != y[0].rational_value())
                          return x[0].rational_value() < y[0].rational_value();
                      for (size_t j = 0; j < x.size(); ++j)
                          if (!(x[j] == y[j])) return x[j].coeffs() < y[j].coeffs();
                      return false;
                  });
        table.verify();
        return table;
    }
}

}  // namespace blockcheck
