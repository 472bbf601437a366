#include "blockcheck/finite_group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>

namespace blockcheck {

FiniteGroup::FiniteGroup(std::vector<Code> elements, Code identity, MulFn mul, InvFn inv,
                         std::vector<Code> generators, std::string name)
    : codes_(std::move(elements)), mul_(std::move(mul)), inv_(std::move(inv)), name_(std::move(name)) {
    std::sort(codes_.begin(), codes_.end());
    codes_.erase(std::unique(codes_.begin(), codes_.end()), codes_.end());
    index_.reserve(codes_.size() * 2);
    for (size_t i = 0; i < codes_.size(); ++i) index_[codes_[i]] = static_cast<int>(i);
    auto it = index_.find(identity);
    if (it == index_.end()) throw std::invalid_argument("FiniteGroup: identity not in element set");
    id_ = it->second;
    for (Code g : generators) gens_.push_back(index_of(g));
    if (gens_.empty())
        for (size_t i = 0; i < codes_.size(); ++i) gens_.push_back(static_cast<int>(i));
}

int FiniteGroup::index_of(Code c) const {
    auto it = index_.find(c);
    if (it == index_.end()) throw std::logic_error("FiniteGroup: product left the element set");
    return it->second;
}

unsigned FiniteGroup::element_order(int a) const {
    unsigned n = 1;
    int x = a;
    while (x != id_) {
        x = mul(x, a);
        ++n;
        if (n > order()) throw std::logic_error("element_order: runaway");
    }
    return n;
}

unsigned FiniteGroup::exponent() const {
    unsigned e = 1;
    for (const ConjClass& c : conjugacy_classes()) e = std::lcm(e, c.element_order);
    return e;
}

const std::vector<FiniteGroup::ConjClass>& FiniteGroup::conjugacy_classes() const {
    if (!classes_.empty()) return classes_;
    class_of_.assign(order(), -1);
    for (int start = 0; start < static_cast<int>(order()); ++start) {
        if (class_of_[start] != -1) continue;
        int cls = static_cast<int>(classes_.size());
        std::vector<int> members{start};
        class_of_[start] = cls;
        std::deque<int> queue{start};
        while (!queue.empty()) {
            int x = queue.front();
            queue.pop_front();
            for (int g : gens_) {
                int y = conjugate(g, x);
                if (class_of_[y] == -1) {
                    class_of_[y] = cls;
                    members.push_back(y);
                    queue.push_back(y);
                }
            }
        }
        std::sort(members.begin(), members.end());
        classes_.push_back({members.front(), std::move(members), element_order(start)});
    }
    // identity class first, then by element order and size for determinism
    std::stable_sort(classes_.begin(), classes_.end(), [this](const ConjClass& a, const ConjClass& b) {
        if ((a.rep == id_) != (b.rep == id_)) return a.rep == id_;
        if (a.element_order != b.element_order) return a.element_order < b.element_order;
        if (a.members.size() != b.members.size()) return a.members.size() < b.members.size();
        return a.rep < b.rep;
    });
    for (size_t c = 0; c < classes_.size(); ++c)
        for (int m : classes_[c].members) class_of_[m] = static_cast<int>(c);
    return classes_;
}

int FiniteGroup::class_of(int element) const {
    conjugacy_classes();
    return class_of_[element];
}

std::vector<int> FiniteGroup::subgroup_closure(const std::vector<int>& seed) const {
    std::set<int> have(seed.begin(), seed.end());
    have.insert(id_);
    std::deque<int> queue(have.begin(), have.end());
    while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        for (int s : std::vector<int>(have.begin(), have.end())) {
            for (int y : {mul(x, s), mul(s, x)}) {
                if (have.insert(y).second) queue.push_back(y);
            }
        }
    }
    return std::vector<int>(have.begin(), have.end());
}

std::vector<FiniteGroup::Code> generate_codes(const std::vector<FiniteGroup::Code>& gens,
                                              FiniteGroup::Code identity, const FiniteGroup::MulFn& mul) {
    std::set<FiniteGroup::Code> have{identity};
    for (auto g : gens) have.insert(g);
    std::deque<FiniteGroup::Code> queue(have.begin(), have.end());
    while (!queue.empty()) {
        auto x = queue.front();
        queue.pop_front();
        for (auto g : gens) {
            auto y = mul(x, g);
            if (have.insert(y).second) queue.push_back(y);
        }
    }
    return std::vector<FiniteGroup::Code>(have.begin(), have.end());
}

namespace f2mat {

uint32_t mul(uint32_t a, uint32_t b) {
    // rows of a times columns of b, GF(2)
    uint32_t out = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            unsigned bit = 0;
            for (int k = 0; k < 3; ++k) bit ^= ((a >> (3 * i + k)) & 1u) & ((b >> (3 * k + j)) & 1u);
            out |= bit << (3 * i + j);
        }
    return out;
}

uint32_t identity() { return 0b100'010'001; }

bool invertible(uint32_t a) {
    // determinant over GF(2)
    auto e = [a](int i, int j) { return (a >> (3 * i + j)) & 1u; };
    unsigned det = e(0, 0) & ((e(1, 1) & e(2, 2)) ^ (e(1, 2) & e(2, 1)));
    det ^= e(0, 1) & ((e(1, 0) & e(2, 2)) ^ (e(1, 2) & e(2, 0)));
    det ^= e(0, 2) & ((e(1, 0) & e(2, 1)) ^ (e(1, 1) & e(2, 0)));
    return det != 0;
}

uint32_t inverse(uint32_t a) {
    // order of GL_3(2) is 168; |a| divides it, so a^(167) works, but a simple
    // power search is clearer at this size.
    uint32_t p = a, prev = identity();
    while (p != identity()) {
        prev = p;
        p = mul(p, a);
    }
    return prev;
}

uint32_t apply(uint32_t mat, uint32_t vec) {
    uint32_t out = 0;
    for (int i = 0; i < 3; ++i) {
        unsigned bit = 0;
        for (int k = 0; k < 3; ++k) bit ^= ((mat >> (3 * i + k)) & 1u) & ((vec >> k) & 1u);
        out |= bit << i;
    }
    return out;
}

}  // namespace f2mat

FiniteGroup build_semidirect(unsigned r, const std::vector<uint32_t>& e_matrices, const std::string& name) {
    if (r != 3) throw std::invalid_argument("build_semidirect: rank 3 expected");
    // closure check on E
    std::set<uint32_t> eset(e_matrices.begin(), e_matrices.end());
    eset.insert(f2mat::identity());
    for (uint32_t a : eset)
        for (uint32_t b : eset)
            if (!eset.count(f2mat::mul(a, b))) throw std::invalid_argument("build_semidirect: E not closed");

    auto pack = [](uint32_t v, uint32_t e) { return (static_cast<uint64_t>(v) << 9) | e; };
    auto mul = [](FiniteGroup::Code a, FiniteGroup::Code b) -> FiniteGroup::Code {
        uint32_t va = static_cast<uint32_t>(a >> 9), ea = static_cast<uint32_t>(a & 0x1ff);
        uint32_t vb = static_cast<uint32_t>(b >> 9), eb = static_cast<uint32_t>(b & 0x1ff);
        return (static_cast<uint64_t>(va ^ f2mat::apply(ea, vb)) << 9) | f2mat::mul(ea, eb);
    };
    auto inv = [](FiniteGroup::Code a) -> FiniteGroup::Code {
        uint32_t va = static_cast<uint32_t>(a >> 9), ea = static_cast<uint32_t>(a & 0x1ff);
        uint32_t ei = f2mat::inverse(ea);
        return (static_cast<uint64_t>(f2mat::apply(ei, va)) << 9) | ei;
    };

    std::vector<FiniteGroup::Code> elems;
    for (uint32_t v = 0; v < (1u << r); ++v)
        for (uint32_t e : eset) elems.push_back(pack(v, e));
    std::vector<FiniteGroup::Code> gens;
    for (uint32_t v = 0; v < (1u << r); ++v) gens.push_back(pack(v, f2mat::identity()));
    for (uint32_t e : eset) gens.push_back(pack(0, e));
    return FiniteGroup(std::move(elems), pack(0, f2mat::identity()), mul, inv, std::move(gens), name);
}

std::vector<uint32_t> gl3f2_elements() {
    std::vector<uint32_t> out;
    for (uint32_t m = 0; m < 512; ++m)
        if (f2mat::invertible(m)) out.push_back(m);
    return out;
}

std::vector<uint32_t> gl3f2_odd_subgroup(unsigned order) {
    // Multiplication by a generator of GF(8)^x in the basis {1, a, a^2} with
    // a^3 = a + 1, and the Frobenius x -> x^2 in the same basis.
    auto pack_cols = [](uint32_t c0, uint32_t c1, uint32_t c2) {
        uint32_t m = 0;
        for (int i = 0; i < 3; ++i) {
            m |= ((c0 >> i) & 1u) << (3 * i + 0);
            m |= ((c1 >> i) & 1u) << (3 * i + 1);
            m |= ((c2 >> i) & 1u) << (3 * i + 2);
        }
        return m;
    };
    uint32_t seven = pack_cols(0b010, 0b100, 0b011);   // 1->a, a->a^2, a^2->1+a
    uint32_t three = pack_cols(0b001, 0b100, 0b110);   // 1->1, a->a^2, a^2->a+a^2
    std::vector<uint32_t> gens;
    switch (order) {
        case 1: break;
        case 3: gens = {three}; break;
        case 7: gens = {seven}; break;
        case 21: gens = {seven, three}; break;
        default: throw std::invalid_argument("gl3f2_odd_subgroup: order must be 1, 3, 7 or 21");
    }
    std::set<uint32_t> have{f2mat::identity()};
    std::deque<uint32_t> queue(have.begin(), have.end());
    while (!queue.empty()) {
        uint32_t x = queue.front();
        queue.pop_front();
        for (uint32_t g : gens) {
            uint32_t y = f2mat::mul(x, g);
            if (have.insert(y).second) queue.push_back(y);
        }
    }
    std::vector<uint32_t> out(have.begin(), have.end());
    if (out.size() != order) throw std::logic_error("gl3f2_odd_subgroup: wrong order generated");
    return out;
}

std::vector<std::vector<uint32_t>> odd_subgroups_gl3f2() {
    std::vector<uint32_t> all = gl3f2_elements();
    auto order_of = [](uint32_t m) {
        unsigned n = 1;
        uint32_t p = m;
        while (p != f2mat::identity()) {
            p = f2mat::mul(p, m);
            ++n;
        }
        return n;
    };
    auto closure = [](std::vector<uint32_t> gens) {
        std::set<uint32_t> have{f2mat::identity()};
        std::deque<uint32_t> queue{f2mat::identity()};
        while (!queue.empty()) {
            uint32_t x = queue.front();
            queue.pop_front();
            for (uint32_t g : gens) {
                uint32_t y = f2mat::mul(x, g);
                if (have.insert(y).second) queue.push_back(y);
            }
        }
        return std::set<uint32_t>(have.begin(), have.end());
    };

    // All odd-order subgroups arise as <x>, x of order 3 or 7, or as the
    // normaliser-closure <x, y> with |x| = 7, |y| = 3; collect them all and
    // keep one representative per GL_3(2)-conjugacy class.
    std::set<std::set<uint32_t>> subgroups;
    subgroups.insert({f2mat::identity()});
    std::vector<uint32_t> ord3, ord7;
    for (uint32_t m : all) {
        unsigned o = order_of(m);
        if (o == 3) ord3.push_back(m);
        if (o == 7) ord7.push_back(m);
    }
    for (uint32_t m : ord3) subgroups.insert(closure({m}));
    for (uint32_t m : ord7) subgroups.insert(closure({m}));
    for (uint32_t m : ord7)
        for (uint32_t y : ord3) {
            // y normalises <m> iff y m y^-1 is a power of m
            uint32_t conj = f2mat::mul(f2mat::mul(y, m), f2mat::inverse(y));
            std::set<uint32_t> cyc = closure({m});
            if (cyc.count(conj)) {
                auto s = closure({m, y});
                if (s.size() % 2 == 1) subgroups.insert(s);
            }
        }

    // classify up to conjugacy
    std::vector<std::set<uint32_t>> reps;
    for (const auto& s : subgroups) {
        bool seen = false;
        for (const auto& r : reps) {
            if (r.size() != s.size()) continue;
            for (uint32_t g : all) {
                uint32_t gi = f2mat::inverse(g);
                bool match = true;
                for (uint32_t x : s)
                    if (!r.count(f2mat::mul(f2mat::mul(g, x), gi))) {
                        match = false;
                        break;
                    }
                if (match) {
                    seen = true;
                    break;
                }
            }
            if (seen) break;
        }
        if (!seen) reps.push_back(s);
    }
    std::sort(reps.begin(), reps.end(),
              [](const std::set<uint32_t>& a, const std::set<uint32_t>& b) { return a.size() < b.size(); });
    std::vector<std::vector<uint32_t>> out;
    for (const auto& r : reps) out.emplace_back(r.begin(), r.end());
    return out;
}

namespace {

struct Mat2Codec {
    const GF* f;
    unsigned q;
    explicit Mat2Codec(const GF& field) : f(&field), q(field.q()) {}
    FiniteGroup::Code pack(uint8_t a, uint8_t b, uint8_t c, uint8_t d) const {
        return ((static_cast<uint64_t>(a) * q + b) * q + c) * q + d;
    }
    void unpack(FiniteGroup::Code m, uint8_t& a, uint8_t& b, uint8_t& c, uint8_t& d) const {
        d = static_cast<uint8_t>(m % q);
        m /= q;
        c = static_cast<uint8_t>(m % q);
        m /= q;
        b = static_cast<uint8_t>(m % q);
        m /= q;
        a = static_cast<uint8_t>(m);
    }
    FiniteGroup::Code mul(FiniteGroup::Code x, FiniteGroup::Code y) const {
        uint8_t a, b, c, d, e, g, h, i;
        unpack(x, a, b, c, d);
        unpack(y, e, g, h, i);
        return pack(f->add(f->mul(a, e), f->mul(b, h)), f->add(f->mul(a, g), f->mul(b, i)),
                    f->add(f->mul(c, e), f->mul(d, h)), f->add(f->mul(c, g), f->mul(d, i)));
    }
    uint8_t det(FiniteGroup::Code x) const {
        uint8_t a, b, c, d;
        unpack(x, a, b, c, d);
        return f->sub(f->mul(a, d), f->mul(b, c));
    }
    FiniteGroup::Code inv(FiniteGroup::Code x) const {
        uint8_t a, b, c, d;
        unpack(x, a, b, c, d);
        uint8_t dt = det(x);
        uint8_t di = f->inv(dt);
        return pack(f->mul(d, di), f->mul(f->neg(b), di), f->mul(f->neg(c), di), f->mul(a, di));
    }
};

const GF& field_for(unsigned q) {
    static std::map<unsigned, GF> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(q);
    if (it == cache.end()) it = cache.emplace(q, GF(q)).first;
    return it->second;
}

}  // namespace

FiniteGroup build_sl2(unsigned q) {
    const GF& f = field_for(q);
    Mat2Codec codec(f);
    std::vector<FiniteGroup::Code> elems;
    for (unsigned a = 0; a < q; ++a)
        for (unsigned b = 0; b < q; ++b)
            for (unsigned c = 0; c < q; ++c)
                for (unsigned d = 0; d < q; ++d) {
                    FiniteGroup::Code m = codec.pack(a, b, c, d);
                    if (codec.det(m) == 1) elems.push_back(m);
                }
    std::vector<FiniteGroup::Code> gens{codec.pack(1, 1, 0, 1), codec.pack(1, 0, 1, 1)};
    return FiniteGroup(std::move(elems), codec.pack(1, 0, 0, 1),
                       [codec](FiniteGroup::Code x, FiniteGroup::Code y) { return codec.mul(x, y); },
                       [codec](FiniteGroup::Code x) { return codec.inv(x); }, std::move(gens),
                       "SL2(" + std::to_string(q) + ")");
}

FiniteGroup build_gl2(unsigned q) {
    const GF& f = field_for(q);
    Mat2Codec codec(f);
    std::vector<FiniteGroup::Code> elems;
    for (unsigned a = 0; a < q; ++a)
        for (unsigned b = 0; b < q; ++b)
            for (unsigned c = 0; c < q; ++c)
                for (unsigned d = 0; d < q; ++d) {
                    FiniteGroup::Code m = codec.pack(a, b, c, d);
                    if (codec.det(m) != 0) elems.push_back(m);
                }
    // generators: transvections plus a diagonal with a multiplicative generator
    uint8_t gen = 0;
    for (unsigned g = 2; g < q; ++g) {
        unsigned o = 1;
        uint8_t p = static_cast<uint8_t>(g);
        while (p != 1) {
            p = f.mul(p, static_cast<uint8_t>(g));
            ++o;
        }
        if (o == q - 1) {
            gen = static_cast<uint8_t>(g);
            break;
        }
    }
    std::vector<FiniteGroup::Code> gens{codec.pack(1, 1, 0, 1), codec.pack(1, 0, 1, 1)};
    if (gen) gens.push_back(codec.pack(gen, 0, 0, 1));
    return FiniteGroup(std::move(elems), codec.pack(1, 0, 0, 1),
                       [codec](FiniteGroup::Code x, FiniteGroup::Code y) { return codec.mul(x, y); },
                       [codec](FiniteGroup::Code x) { return codec.inv(x); }, std::move(gens),
                       "GL2(" + std::to_string(q) + ")");
}

namespace {

// Projective canonical form: scale so the first nonzero of (a, b, c, d) is 1.
FiniteGroup::Code proj_canon(const Mat2Codec& codec, const GF& f, FiniteGroup::Code m) {
    uint8_t e[4];
    codec.unpack(m, e[0], e[1], e[2], e[3]);
    for (int i = 0; i < 4; ++i) {
        if (e[i] != 0) {
            uint8_t s = f.inv(e[i]);
            return codec.pack(f.mul(e[0], s), f.mul(e[1], s), f.mul(e[2], s), f.mul(e[3], s));
        }
    }
    throw std::logic_error("proj_canon: zero matrix");
}

// PSL canonical form: the smaller code of {M, -M}.
FiniteGroup::Code psl_canon(const Mat2Codec& codec, const GF& f, FiniteGroup::Code m) {
    uint8_t a, b, c, d;
    codec.unpack(m, a, b, c, d);
    FiniteGroup::Code neg = codec.pack(f.neg(a), f.neg(b), f.neg(c), f.neg(d));
    return std::min(m, neg);
}

}  // namespace

FiniteGroup build_pgl2(unsigned q) {
    const GF& f = field_for(q);
    Mat2Codec codec(f);
    std::set<FiniteGroup::Code> elems;
    for (unsigned a = 0; a < q; ++a)
        for (unsigned b = 0; b < q; ++b)
            for (unsigned c = 0; c < q; ++c)
                for (unsigned d = 0; d < q; ++d) {
                    FiniteGroup::Code m = codec.pack(a, b, c, d);
                    if (codec.det(m) != 0) elems.insert(proj_canon(codec, f, m));
                }
    auto mul = [codec, &f](FiniteGroup::Code x, FiniteGroup::Code y) {
        return proj_canon(codec, f, codec.mul(x, y));
    };
    auto inv = [codec, &f](FiniteGroup::Code x) { return proj_canon(codec, f, codec.inv(x)); };
    std::vector<FiniteGroup::Code> gens{proj_canon(codec, f, codec.pack(1, 1, 0, 1)),
                                        proj_canon(codec, f, codec.pack(1, 0, 1, 1))};
    // a non-square diagonal twist generates the part outside PSL2
    for (unsigned g = 2; g < q; ++g) {
        bool square = false;
        for (unsigned t = 1; t < q; ++t)
            if (f.mul(t, t) == g) square = true;
        if (!square) {
            gens.push_back(proj_canon(codec, f, codec.pack(static_cast<uint8_t>(g), 0, 0, 1)));
            break;
        }
    }
    return FiniteGroup(std::vector<FiniteGroup::Code>(elems.begin(), elems.end()),
                       proj_canon(codec, f, codec.pack(1, 0, 0, 1)), mul, inv, std::move(gens),
                       "PGL2(" + std::to_string(q) + ")");
}

FiniteGroup build_go2(unsigned q, bool plus_type) {
    const GF& f = field_for(q);
    Mat2Codec codec(f);
    // Gram matrix: [[0,1],[1,0]] (split) or [[1,0],[0,-delta]] with delta a
    // nonsquare (anisotropic).
    uint8_t g00, g01, g11;
    if (plus_type) {
        g00 = 0;
        g01 = 1;
        g11 = 0;
    } else {
        uint8_t delta = 0;
        for (unsigned t = 2; t < q && !delta; ++t) {
            bool square = false;
            for (unsigned s = 1; s < q; ++s)
                if (f.mul(s, s) == t) square = true;
            if (!square) delta = static_cast<uint8_t>(t);
        }
        g00 = 1;
        g01 = 0;
        g11 = f.neg(delta);
    }
    // (M^T G M)_{ij} = sum_{k,l} M_{ki} G_{kl} M_{lj}; columns (a,c) and (b,d).
    auto preserves = [&](uint8_t a, uint8_t b, uint8_t c, uint8_t d) {
        auto entry = [&](uint8_t m0i, uint8_t m1i, uint8_t m0j, uint8_t m1j) {
            uint8_t s = f.mul(f.mul(m0i, g00), m0j);
            s = f.add(s, f.mul(f.mul(m0i, g01), m1j));
            s = f.add(s, f.mul(f.mul(m1i, g01), m0j));
            s = f.add(s, f.mul(f.mul(m1i, g11), m1j));
            return s;
        };
        return entry(a, c, a, c) == g00 && entry(a, c, b, d) == g01 && entry(b, d, b, d) == g11;
    };
    std::vector<FiniteGroup::Code> elems;
    for (unsigned a = 0; a < q; ++a)
        for (unsigned b = 0; b < q; ++b)
            for (unsigned c = 0; c < q; ++c)
                for (unsigned d = 0; d < q; ++d)
                    if (preserves(static_cast<uint8_t>(a), static_cast<uint8_t>(b),
                                  static_cast<uint8_t>(c), static_cast<uint8_t>(d))) {
                        FiniteGroup::Code m = codec.pack(a, b, c, d);
                        if (codec.det(m) != 0) elems.push_back(m);
                    }
    return FiniteGroup(std::move(elems), codec.pack(1, 0, 0, 1),
                       [codec](FiniteGroup::Code x, FiniteGroup::Code y) { return codec.mul(x, y); },
                       [codec](FiniteGroup::Code x) { return codec.inv(x); }, {},
                       std::string("GO2") + (plus_type ? "+" : "-") + "(" + std::to_string(q) + ")");
}

FiniteGroup build_psl2(unsigned q) {
    const GF& f = field_for(q);
    Mat2Codec codec(f);
    std::set<FiniteGroup::Code> elems;
    for (unsigned a = 0; a < q; ++a)
        for (unsigned b = 0; b < q; ++b)
            for (unsigned c = 0; c < q; ++c)
                for (unsigned d = 0; d < q; ++d) {
                    FiniteGroup::Code m = codec.pack(a, b, c, d);
                    if (codec.det(m) == 1) elems.insert(psl_canon(codec, f, m));
                }
    auto mul = [codec, &f](FiniteGroup::Code x, FiniteGroup::Code y) {
        return psl_canon(codec, f, codec.mul(x, y));
    };
    auto inv = [codec, &f](FiniteGroup::Code x) { return psl_canon(codec, f, codec.inv(x)); };
    std::vector<FiniteGroup::Code> gens{psl_canon(codec, f, codec.pack(1, 1, 0, 1)),
                                        psl_canon(codec, f, codec.pack(1, 0, 1, 1))};
    return FiniteGroup(std::vector<FiniteGroup::Code>(elems.begin(), elems.end()),
                       psl_canon(codec, f, codec.pack(1, 0, 0, 1)), mul, inv, std::move(gens),
                       "PSL2(" + std::to_string(q) + ")");
}

}  // namespace blockcheck
