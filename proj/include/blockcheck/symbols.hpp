#pragma once

#include <string>
#include <vector>

#include "blockcheck/cycproduct.hpp"
#include "blockcheck/liedata.hpp"
#include "blockcheck/partitions.hpp"

namespace blockcheck {

/// Symbol [X, Y]: unordered pair of finite subsets of the nonnegative
/// integers, considered up to simultaneous shift and swap.  Stored with
/// entries strictly decreasing.
class Symbol {
public:
    Symbol() = default;
    Symbol(std::vector<unsigned> x, std::vector<unsigned> y);

    const std::vector<unsigned>& x() const { return x_; }
    const std::vector<unsigned>& y() const { return y_; }
    size_t k() const { return x_.size(); }
    size_t r() const { return y_.size(); }

    bool degenerate() const { return x_ == y_; }
    long defect() const { return static_cast<long>(k()) - static_cast<long>(r()); }

    /// Shift: add 1 to every entry and adjoin 0 to both rows.
    Symbol shifted() const;
    Symbol swapped() const { return Symbol(y_, x_); }

    /// Reduced, swap-canonical representative (no downshift possible; for the
    /// swap ambiguity the row pair is ordered with k >= r, ties by X <= Y
    /// lexicographically on the descending sequences).
    Symbol reduced() const;

    unsigned rank() const;
    unsigned c_value() const;

    /// Hook lengths {z - z' : z in Z, z' not in Z, 0 <= z' < z, Z in {X, Y}}.
    std::vector<unsigned> hook_list() const;
    /// Cohook lengths {z - z' : z in X, z' not in Y} union {z in Y, z' not in X}.
    std::vector<unsigned> cohook_list() const;

    /// Closed-form counts from the entry sums.
    long h_plus() const;
    long h_minus() const;

    /// c + h+ + h- - 2 rank; 0 when k - r is odd or X = Y, -1 when k - r is
    /// even and X != Y; anything else is a hard failure.
    long identity_check() const;

    std::string to_string() const;
    bool operator==(const Symbol& o) const { return x_ == o.x_ && y_ == o.y_; }
    bool operator<(const Symbol& o) const { return std::tie(x_, y_) < std::tie(o.x_, o.y_); }

private:
    std::vector<unsigned> x_, y_;  // strictly decreasing
};

/// r'-part of the unipotent character degree of type B/C (odd defect) or
/// D/2D (even defect):  |G|_{r'} / (2^c prod_h(q^h-1) prod_{h'}(q^{h'}+1)).
/// The family argument must match the symbol's defect parity (and mod-4
/// class for D vs 2D); a supplied expected_rank must equal the symbol rank.
/// Integrality is checked at q in {3,5} on construction.
CycProduct degree_bcd(const Symbol& s, LieFamily family, long expected_rank = -1);

/// 2-defect at odd q: c + sum_h v2(q^h-1) + sum_{h'} v2(q^{h'}+1).
long defect_bcd(const Symbol& s, const Int& q);

/// All reduced symbols of the given rank whose defect |k-r| has the given
/// parity, each equivalence class exactly once.  k + r is capped (default
/// high enough for every class of the given rank to appear; classes with
/// k + r beyond the cap are impossible once minimal entry sums exceed the
/// rank).
std::vector<Symbol> enumerate_symbols(unsigned rank, unsigned parity, unsigned max_k_plus_r = 64);

struct DefectScanEntry {
    std::string label;
    CycProduct degree_rprime;
    long defect;
};

struct DefectScanResult {
    long min_defect;
    std::string witness;
    std::vector<DefectScanEntry> entries;
};

/// Minimum 2-defect over all unipotent characters of the family at rank l and
/// odd q, with per-label records.  Families: A/2A (partitions of l+1),
/// B/C (odd-defect symbols of rank l), D/2D (defect 0/2 mod 4).
DefectScanResult min_defect_scan(LieFamily family, unsigned rank, const Int& q);

}  // namespace blockcheck
