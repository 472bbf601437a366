#pragma once

#include <string>
#include <vector>

#include "blockcheck/finite_group.hpp"

namespace blockcheck {

enum class TwoGroupType {
    trivial,
    cyclic,
    klein_four,
    elem_abelian_8,
    dihedral,
    generalized_quaternion,
    semidihedral,
    other
};

std::string two_group_type_name(TwoGroupType t);

/// A Sylow 2-subgroup of g, as element indices (closed under the group law).
std::vector<int> sylow2(const FiniteGroup& g);

/// Isomorphism type of a 2-subgroup, by involution count and the
/// index-2-cyclic presentation checks.
TwoGroupType recognize_2group(const FiniteGroup& g, const std::vector<int>& subgroup);

/// Dihedral test for a whole group of any even order 2m: a cyclic subgroup of
/// order m plus an involution inverting it.
bool is_dihedral_group(const FiniteGroup& g);

}  // namespace blockcheck
