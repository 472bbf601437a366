#pragma once

#include <optional>
#include <string>
#include <vector>

#include "blockcheck/lzero.hpp"

namespace blockcheck {

/// Signed bijection chi_i -> delta_i eta_{sigma(i)} between two character
/// tables with equally many irreducibles.
struct IsometryCandidate {
    std::vector<size_t> permutation;  // sigma, source index -> target index
    std::vector<int> signs;           // delta_i in {+1, -1}

    std::string to_string() const;
};

/// A partial isometry given by images of the source L0 basis vectors
/// (coordinates in the respective Irr bases).
struct PartialIsometry {
    std::vector<std::vector<Int>> src_basis;
    std::vector<std::vector<Int>> tgt_images;
};

/// Identity partial map on a lattice (src = tgt).
PartialIsometry identity_partial(const GenCharLattice& l);

/// Search for a signed bijection whose induced lattice map restricts to the
/// given partial isometry; exhaustive over sign/labelling choices, pruned by
/// matching the per-character coordinate columns and by equal-degree sign
/// coherence.  Empty result means no extension exists.
std::optional<IsometryCandidate> extend_isometry(const GenCharLattice& src, const GenCharLattice& tgt,
                                                 const PartialIsometry& partial);

struct PerfectnessReport {
    bool integrality = true;
    bool separation = true;
    std::vector<std::pair<size_t, size_t>> integrality_failures;  // (src class, tgt class)
    std::vector<std::pair<size_t, size_t>> separation_failures;
    bool pass() const { return integrality && separation; }
};

/// Broue conditions on the bicharacter mu(g, h) = sum_i delta_i chi_i(g)
/// conj(eta_{sigma(i)}(h)): mu/|C_G(g)| and mu/|C_H(h)| algebraic integers,
/// and mu = 0 unless g, h are both 2-regular or both 2-singular.
PerfectnessReport check_perfect(const CharacterTable& src, const CharacterTable& tgt,
                                const IsometryCandidate& c);

}  // namespace blockcheck
