#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <unordered_map>
#include <vector>

#include "blockcheck/gf.hpp"

namespace blockcheck {

/// Explicit finite group: every element enumerated as an opaque code, with
/// multiplication and inversion supplied by the construction.  Elements are
/// addressed by dense indices.
class FiniteGroup {
public:
    using Code = uint64_t;
    using MulFn = std::function<Code(Code, Code)>;
    using InvFn = std::function<Code(Code)>;

    FiniteGroup(std::vector<Code> elements, Code identity, MulFn mul, InvFn inv,
                std::vector<Code> generators, std::string name);

    size_t order() const { return codes_.size(); }
    const std::string& name() const { return name_; }
    int identity() const { return id_; }
    int index_of(Code c) const;
    Code code_of(int i) const { return codes_[i]; }
    const std::vector<int>& generators() const { return gens_; }

    int mul(int a, int b) const { return index_of(mul_(codes_[a], codes_[b])); }
    int inv(int a) const { return index_of(inv_(codes_[a])); }
    int conjugate(int g, int x) const { return mul(mul(g, x), inv(g)); }

    unsigned element_order(int a) const;
    unsigned exponent() const;

    struct ConjClass {
        int rep;
        std::vector<int> members;
        unsigned element_order;
    };
    const std::vector<ConjClass>& conjugacy_classes() const;
    int class_of(int element) const;

    /// Subgroup closure of the given element indices.
    std::vector<int> subgroup_closure(const std::vector<int>& seed) const;

private:
    std::vector<Code> codes_;
    std::unordered_map<Code, int> index_;
    MulFn mul_;
    InvFn inv_;
    std::vector<int> gens_;
    int id_;
    std::string name_;
    mutable std::vector<ConjClass> classes_;
    mutable std::vector<int> class_of_;
};

/// Closure of a generator set under a multiplication function.
std::vector<FiniteGroup::Code> generate_codes(const std::vector<FiniteGroup::Code>& gens,
                                              FiniteGroup::Code identity, const FiniteGroup::MulFn& mul);

/// 3x3 matrices over GF(2) packed into 9 bits, row-major.
namespace f2mat {
uint32_t mul(uint32_t a, uint32_t b);
uint32_t identity();
bool invertible(uint32_t a);
uint32_t inverse(uint32_t a);
uint32_t apply(uint32_t mat, uint32_t vec);  // vec: 3 bits
}  // namespace f2mat

/// (C2)^r x| E for E a set of invertible r x r matrices over GF(2) closed
/// under multiplication (r = 3 here); pairs (v, e) with
/// (v, e)(w, f) = (v + e w, e f).
FiniteGroup build_semidirect(unsigned r, const std::vector<uint32_t>& e_matrices, const std::string& name);

/// All elements of GL_3(2) as packed matrices.
std::vector<uint32_t> gl3f2_elements();

/// Conjugacy-class representatives of the odd-order subgroups of GL_3(2),
/// returned as (subgroup elements, order) sorted by order: 1, 3, 7, 21.
std::vector<std::vector<uint32_t>> odd_subgroups_gl3f2();

/// Standard generators of the odd-order subgroup of GL_3(2) of the given
/// order (1, 3, 7 or 21).
std::vector<uint32_t> gl3f2_odd_subgroup(unsigned order);

FiniteGroup build_sl2(unsigned q);
FiniteGroup build_gl2(unsigned q);
FiniteGroup build_pgl2(unsigned q);
FiniteGroup build_psl2(unsigned q);

/// Full orthogonal group of a 2-dimensional form: the split (plus) type
/// preserves xy, the nonsplit (minus) type an anisotropic form; orders are
/// 2(q - 1) and 2(q + 1).
FiniteGroup build_go2(unsigned q, bool plus_type);

}  // namespace blockcheck
