#pragma once

#include <optional>
#include <string>
#include <vector>

#include "blockcheck/char_table.hpp"
#include "blockcheck/intmatrix.hpp"

namespace blockcheck {

/// Integer lattice of generalized characters vanishing on all 2-regular
/// classes; rows of basis() are coordinates in the Irr basis, HNF-canonical.
class GenCharLattice {
public:
    GenCharLattice(const CharacterTable& table, IntMatrix basis)
        : table_(&table), basis_(std::move(basis)) {}

    const CharacterTable& table() const { return *table_; }
    const IntMatrix& basis() const { return basis_; }
    size_t rank() const { return basis_.rows(); }

    bool contains(const std::vector<Int>& v) const { return in_row_lattice(basis_, v); }
    bool same_lattice(const GenCharLattice& o) const { return basis_ == o.basis_; }

    /// All lattice vectors of the given norm (coordinates bounded by the norm,
    /// so the search box is complete); one of each +-pair, positive first
    /// nonzero coordinate.
    std::vector<std::vector<Int>> vectors_of_norm(long norm) const;

private:
    const CharacterTable* table_;
    IntMatrix basis_;
};

/// Kernel of the restriction-to-2-regular-classes map over Z.
GenCharLattice compute_lzero(const CharacterTable& t);

/// Inner product of two integer combinations of irreducibles; computed from
/// the class functions, exact.
Rat inner_product(const CharacterTable& t, const std::vector<Int>& u, const std::vector<Int>& v);

enum class BasisShape { E3, E7, E21 };

struct ShapeWitness {
    BasisShape shape;
    std::vector<std::vector<Int>> vectors;  // shape order: norm-2 vectors first, then the norm-4 one
    std::string description;
};

/// Searches the lattice for the basis shape of the given inertial-quotient
/// case: E3 = four norm-2 vectors with pairwise disjoint supports plus a
/// norm-4 vector meeting each of them; E7 = a single norm-8 generator with
/// full support; E21 = three norm-4 basis vectors, any two sharing exactly two
/// support characters.  Returns nothing when no witness exists.
std::optional<ShapeWitness> match_basis_shape(const GenCharLattice& l, BasisShape shape);

/// Multisets of |coefficients| (nonzero) with sum of squares 8 and support
/// size at most max_support, ascending.
std::vector<std::vector<unsigned>> norm8_supports(unsigned max_support);

struct LandrockCase {
    unsigned inertial_order;                          // 1, 3, 7, 21
    std::vector<std::pair<unsigned, unsigned>> pairs; // admissible (k, l)
    unsigned difference;                              // k - l, constant per case
};

const LandrockCase& landrock_lookup(unsigned inertial_order);
unsigned inertial_from_difference(unsigned k_minus_l);

}  // namespace blockcheck
