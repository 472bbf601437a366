#include "blockcheck/lzero.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace blockcheck {

GenCharLattice compute_lzero(const CharacterTable& t) {
    size_t k = t.num_irreducibles();
    unsigned deg = euler_phi(t.conductor());
    std::vector<size_t> regular;
    for (size_t j = 0; j < t.classes().size(); ++j)
        if (t.classes()[j].two_regular) regular.push_back(j);

    // One integer column per (regular class, power-basis coordinate).
    IntMatrix a(k, regular.size() * deg);
    for (size_t i = 0; i < k; ++i)
        for (size_t c = 0; c < regular.size(); ++c) {
            const CycInt& v = t.value(i, regular[c]);
            for (unsigned m = 0; m < deg; ++m) a.at(i, c * deg + m) = Int(static_cast<long>(v.coeffs()[m]));
        }
    IntMatrix basis = hermite_kernel(a);

    // Exact vanishing check on every 2-regular class.
    for (size_t r = 0; r < basis.rows(); ++r) {
        std::vector<Int> coeffs(k);
        for (size_t i = 0; i < k; ++i) coeffs[i] = basis.at(r, i);
        std::vector<CycInt> values = t.combination(coeffs);
        for (size_t j : regular)
            if (!values[j].is_zero()) throw std::logic_error("compute_lzero: basis vector not vanishing");
    }
    return GenCharLattice(t, std::move(basis));
}

Rat inner_product(const CharacterTable& t, const std::vector<Int>& u, const std::vector<Int>& v) {
    return t.inner_product(t.combination(u), t.combination(v));
}

std::vector<std::vector<Int>> GenCharLattice::vectors_of_norm(long norm) const {
    size_t k = basis_.cols();
    std::vector<std::vector<Int>> out;
    std::vector<Int> cur(k, Int(0));
    // Irreducibles are orthonormal, so the norm bounds every coordinate.
    long box = 0;
    while (box * box < norm) ++box;
    std::function<void(size_t, long)> rec = [&](size_t pos, long rem) {
        if (pos == k) {
            if (rem == 0 && contains(cur)) {
                for (const Int& c : cur)
                    if (c != 0) {
                        if (c > 0) out.push_back(cur);
                        return;
                    }
            }
            return;
        }
        for (long c = -box; c <= box; ++c) {
            if (c * c > rem) continue;
            cur[pos] = c;
            rec(pos + 1, rem - c * c);
        }
        cur[pos] = 0;
    };
    rec(0, norm);
    return out;
}

namespace {

std::set<size_t> support(const std::vector<Int>& v) {
    std::set<size_t> s;
    for (size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) s.insert(i);
    return s;
}

Int dot(const std::vector<Int>& a, const std::vector<Int>& b) {
    Int s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

bool disjoint(const std::set<size_t>& a, const std::set<size_t>& b) {
    for (size_t x : a)
        if (b.count(x)) return false;
    return true;
}

size_t common(const std::set<size_t>& a, const std::set<size_t>& b) {
    size_t n = 0;
    for (size_t x : a)
        if (b.count(x)) ++n;
    return n;
}

}  // namespace

std::optional<ShapeWitness> match_basis_shape(const GenCharLattice& l, BasisShape shape) {
    switch (shape) {
        case BasisShape::E7: {
            if (l.rank() != 1) return std::nullopt;
            auto vs = l.vectors_of_norm(8);
            for (const auto& v : vs) {
                if (support(v).size() != l.basis().cols()) continue;
                std::vector<Int> gen(l.basis().cols());
                for (size_t j = 0; j < gen.size(); ++j) gen[j] = l.basis().at(0, j);
                // v must generate: equality of lattices up to sign
                bool generates = (v == gen);
                if (!generates) {
                    std::vector<Int> neg(gen.size());
                    for (size_t j = 0; j < gen.size(); ++j) neg[j] = -gen[j];
                    generates = (v == neg);
                }
                if (generates)
                    return ShapeWitness{BasisShape::E7, {v}, "norm-8 generator with full support"};
            }
            return std::nullopt;
        }
        case BasisShape::E3: {
            if (l.rank() != 5) return std::nullopt;
            auto n2 = l.vectors_of_norm(2);
            auto n4 = l.vectors_of_norm(4);
            size_t m = n2.size();
            for (size_t a = 0; a < m; ++a)
                for (size_t b = a + 1; b < m; ++b) {
                    if (!disjoint(support(n2[a]), support(n2[b]))) continue;
                    for (size_t c = b + 1; c < m; ++c) {
                        if (!disjoint(support(n2[a]), support(n2[c])) ||
                            !disjoint(support(n2[b]), support(n2[c])))
                            continue;
                        for (size_t d = c + 1; d < m; ++d) {
                            if (!disjoint(support(n2[a]), support(n2[d])) ||
                                !disjoint(support(n2[b]), support(n2[d])) ||
                                !disjoint(support(n2[c]), support(n2[d])))
                                continue;
                            for (const auto& u : n4) {
                                Int pa = dot(u, n2[a]), pb = dot(u, n2[b]), pc = dot(u, n2[c]),
                                    pd = dot(u, n2[d]);
                                if (abs(pa) == 1 && abs(pb) == 1 && abs(pc) == 1 && abs(pd) == 1) {
                                    // flip each norm-2 vector to pair with u positively
                                    std::vector<std::vector<Int>> vs{n2[a], n2[b], n2[c], n2[d], u};
                                    const Int ips[4] = {pa, pb, pc, pd};
                                    for (int t = 0; t < 4; ++t)
                                        if (ips[t] < 0)
                                            for (Int& x : vs[t]) x = -x;
                                    return ShapeWitness{
                                        BasisShape::E3, std::move(vs),
                                        "four disjoint norm-2 vectors and a norm-4 vector meeting each"};
                                }
                            }
                        }
                    }
                }
            return std::nullopt;
        }
        case BasisShape::E21: {
            if (l.rank() != 3) return std::nullopt;
            auto n4 = l.vectors_of_norm(4);
            size_t m = n4.size();
            for (size_t a = 0; a < m; ++a)
                for (size_t b = a + 1; b < m; ++b) {
                    if (common(support(n4[a]), support(n4[b])) != 2) continue;
                    if (abs(dot(n4[a], n4[b])) != 2) continue;
                    for (size_t c = b + 1; c < m; ++c) {
                        if (common(support(n4[a]), support(n4[c])) != 2 ||
                            common(support(n4[b]), support(n4[c])) != 2)
                            continue;
                        // the shared pair is one and the same for all three
                        std::set<size_t> triple;
                        for (size_t x : support(n4[a]))
                            if (support(n4[b]).count(x) && support(n4[c]).count(x)) triple.insert(x);
                        if (triple.size() != 2) continue;
                        Int gab = dot(n4[a], n4[b]), gac = dot(n4[a], n4[c]), gbc = dot(n4[b], n4[c]);
                        if (abs(gac) != 2 || abs(gbc) != 2) continue;
                        // sign-correctable to the constant +2 Gram only when the
                        // product of the three pairings is positive
                        if (gab * gac * gbc < 0) continue;
                        // must span the lattice
                        IntMatrix cand(3, l.basis().cols());
                        for (size_t j = 0; j < l.basis().cols(); ++j) {
                            cand.at(0, j) = n4[a][j];
                            cand.at(1, j) = n4[b][j];
                            cand.at(2, j) = n4[c][j];
                        }
                        HermiteResult hr = hermite_normal_form(cand);
                        IntMatrix h(3, l.basis().cols());
                        if (hr.rank != 3) continue;
                        for (size_t r = 0; r < 3; ++r)
                            for (size_t j = 0; j < l.basis().cols(); ++j) h.at(r, j) = hr.h.at(r, j);
                        if (!(h == l.basis())) continue;
                        std::vector<std::vector<Int>> vs{n4[a], n4[b], n4[c]};
                        if (gab < 0)
                            for (Int& x : vs[1]) x = -x;
                        if (dot(vs[0], vs[2]) < 0)
                            for (Int& x : vs[2]) x = -x;
                        return ShapeWitness{BasisShape::E21, std::move(vs),
                                            "three norm-4 basis vectors pairwise sharing two characters"};
                    }
                }
            return std::nullopt;
        }
    }
    return std::nullopt;
}

std::vector<std::vector<unsigned>> norm8_supports(unsigned max_support) {
    std::vector<std::vector<unsigned>> out;
    std::vector<unsigned> cur;
    // coefficients are at most floor(sqrt(8)) = 2
    std::function<void(unsigned, unsigned)> rec2 = [&](unsigned rem, unsigned maxc) {
        if (rem == 0) {
            std::vector<unsigned> sorted = cur;
            std::sort(sorted.begin(), sorted.end());
            out.push_back(std::move(sorted));
            return;
        }
        if (cur.size() >= max_support) return;
        for (unsigned c = maxc; c >= 1; --c) {
            if (c * c > rem) continue;
            cur.push_back(c);
            rec2(rem - c * c, c);
            cur.pop_back();
        }
    };
    rec2(8, 2);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

const LandrockCase& landrock_lookup(unsigned inertial_order) {
    static const std::vector<LandrockCase> cases = {
        {1, {{8, 1}}, 7},
        {3, {{8, 3}}, 5},
        {7, {{5, 4}, {8, 7}}, 1},
        {21, {{7, 4}, {8, 5}}, 3},
    };
    for (const auto& c : cases)
        if (c.inertial_order == inertial_order) return c;
    throw std::invalid_argument("landrock_lookup: inertial order must be 1, 3, 7 or 21");
}

unsigned inertial_from_difference(unsigned k_minus_l) {
    switch (k_minus_l) {
        case 7: return 1;
        case 5: return 3;
        case 1: return 7;
        case 3: return 21;
        default: throw std::invalid_argument("inertial_from_difference: difference must be 1, 3, 5 or 7");
    }
}

}  // namespace blockcheck
