#pragma once

#include <vector>

#include "blockcheck/cyclotomic_int.hpp"
#include "blockcheck/finite_group.hpp"
#include "blockcheck/numutil.hpp"

namespace blockcheck {

struct TableClass {
    int rep;                 // element index in the group
    unsigned size;
    unsigned element_order;
    bool two_regular;        // odd element order
};

/// Exact ordinary character table: rows are the irreducible characters, with
/// values in Z[zeta_e] for e the group exponent.
class CharacterTable {
public:
    size_t group_order() const { return group_order_; }
    const std::string& group_name() const { return group_name_; }
    unsigned conductor() const { return conductor_; }
    const std::vector<TableClass>& classes() const { return classes_; }
    size_t num_irreducibles() const { return chars_.size(); }
    const CycInt& value(size_t chi, size_t cls) const { return chars_[chi][cls]; }
    long long degree(size_t chi) const;
    std::vector<long long> degrees() const;  // ascending

    /// Exact inner product of two rows of values (class functions), |G|<u,v>
    /// divided by |G| as a rational.
    Rat inner_product(const std::vector<CycInt>& u, const std::vector<CycInt>& v) const;
    Rat inner_product_rows(size_t i, size_t j) const;

    /// Class-function values of an integer combination of irreducibles.
    std::vector<CycInt> combination(const std::vector<Int>& coeffs) const;

    /// Exact orthogonality / degree consistency; throws on violation.
    void verify() const;

    std::string to_text() const;
    /// Structured record {classes:[{order,size,regular}], chars:[[coeff vectors]]}.
    std::string to_json() const;

    friend CharacterTable character_table(const FiniteGroup& g);

private:
    size_t group_order_ = 0;
    std::string group_name_;
    unsigned conductor_ = 1;
    std::vector<TableClass> classes_;
    std::vector<std::vector<CycInt>> chars_;
};

/// Dixon-Schneider: eigenvectors of the class-algebra matrices over a prime
/// field F_p with p = 1 (mod exp G), p > 2 sqrt(|G|), lifted exactly into the
/// cyclotomic ring via eigenvalue-multiplicity recovery.
CharacterTable character_table(const FiniteGroup& g);

}  // namespace blockcheck
