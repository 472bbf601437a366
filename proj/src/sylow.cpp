#include "blockcheck/sylow.hpp"

#include <algorithm>
#include <set>

namespace blockcheck {

std::string two_group_type_name(TwoGroupType t) {
    switch (t) {
        case TwoGroupType::trivial: return "trivial";
        case TwoGroupType::cyclic: return "cyclic";
        case TwoGroupType::klein_four: return "klein_four";
        case TwoGroupType::elem_abelian_8: return "elem_abelian_8";
        case TwoGroupType::dihedral: return "dihedral";
        case TwoGroupType::generalized_quaternion: return "generalized_quaternion";
        case TwoGroupType::semidihedral: return "semidihedral";
        case TwoGroupType::other: return "other";
    }
    return "?";
}

bool is_dihedral_group(const FiniteGroup& g) {
    size_t n = g.order();
    if (n % 2 != 0 || n < 4) return false;
    size_t m = n / 2;
    for (int c = 0; c < static_cast<int>(n); ++c) {
        if (g.element_order(c) != m) continue;
        std::set<int> cyc;
        int x = g.identity();
        for (size_t i = 0; i < m; ++i) {
            cyc.insert(x);
            x = g.mul(x, c);
        }
        int cinv = g.inv(c);
        for (int t = 0; t < static_cast<int>(n); ++t) {
            if (cyc.count(t)) continue;
            if (g.mul(t, t) == g.identity() && g.conjugate(t, c) == cinv) return true;
        }
        return false;  // some outside element would have to invert any maximal cycle
    }
    return false;
}

std::vector<int> sylow2(const FiniteGroup& g) {
    size_t full = 1;
    while (g.order() % (full * 2) == 0) full *= 2;

    std::set<int> sub{g.identity()};
    while (sub.size() < full) {
        // A proper 2-subgroup grows inside its normaliser: find a 2-element of
        // the normaliser outside the subgroup and extend.
        std::vector<int> subv(sub.begin(), sub.end());
        bool grown = false;
        for (int x = 0; x < static_cast<int>(g.order()) && !grown; ++x) {
            if (sub.count(x)) continue;
            unsigned o = g.element_order(x);
            if ((o & (o - 1)) != 0) continue;  // not a 2-power
            // x must normalise the current subgroup
            bool normalises = true;
            for (int s : subv)
                if (!sub.count(g.conjugate(x, s))) {
                    normalises = false;
                    break;
                }
            if (!normalises) continue;
            std::vector<int> seed = subv;
            seed.push_back(x);
            std::vector<int> closed = g.subgroup_closure(seed);
            if ((closed.size() & (closed.size() - 1)) != 0) continue;  // stay a 2-group
            sub = std::set<int>(closed.begin(), closed.end());
            grown = true;
        }
        if (!grown) throw std::logic_error("sylow2: could not extend 2-subgroup");
    }
    return std::vector<int>(sub.begin(), sub.end());
}

TwoGroupType recognize_2group(const FiniteGroup& g, const std::vector<int>& subgroup) {
    size_t n = subgroup.size();
    if (n == 0 || (n & (n - 1)) != 0) throw std::invalid_argument("recognize_2group: order not a 2-power");
    if (n == 1) return TwoGroupType::trivial;

    size_t involutions = 0;
    unsigned max_order = 1;
    for (int x : subgroup) {
        unsigned o = g.element_order(x);
        if (o == 2) ++involutions;
        max_order = std::max(max_order, o);
    }
    if (max_order == n) return TwoGroupType::cyclic;
    if (n == 4) return involutions == 3 ? TwoGroupType::klein_four : TwoGroupType::cyclic;
    if (max_order == 2) return n == 8 ? TwoGroupType::elem_abelian_8 : TwoGroupType::other;

    // Look for a cyclic subgroup of index 2 and classify by the action of an
    // outside element t on a generator c: t c t^-1 = c^-1 (dihedral or
    // quaternion, split by t^2) or c^{n/2 - 1} (semidihedral).
    if (max_order == n / 2) {
        std::set<int> inside(subgroup.begin(), subgroup.end());
        for (int c : subgroup) {
            if (g.element_order(c) != n / 2) continue;
            std::set<int> cyc;
            int x = g.identity();
            for (size_t i = 0; i < n / 2; ++i) {
                cyc.insert(x);
                x = g.mul(x, c);
            }
            int cinv = g.inv(c);
            int chalf = g.identity();
            for (size_t i = 0; i < n / 4; ++i) chalf = g.mul(chalf, c);  // c^{n/4}
            for (int t : subgroup) {
                if (cyc.count(t)) continue;
                int conj = g.conjugate(t, c);
                int t2 = g.mul(t, t);
                if (conj == cinv) {
                    if (t2 == g.identity()) return TwoGroupType::dihedral;
                    if (t2 == chalf) return TwoGroupType::generalized_quaternion;
                }
            }
            // semidihedral: t c t^-1 = c^{n/4 - 1}
            for (int t : subgroup) {
                if (cyc.count(t)) continue;
                int t2 = g.mul(t, t);
                if (t2 != g.identity()) continue;
                int conj = g.conjugate(t, c);
                int target = g.identity();
                for (size_t i = 0; i + 1 < n / 4; ++i) target = g.mul(target, c);
                // target = c^{n/4 - 1}; semidihedral relation uses exponent n/4 - 1
                if (n >= 16 && conj == target) return TwoGroupType::semidihedral;
            }
        }
    }
    return TwoGroupType::other;
}

}  // namespace blockcheck
