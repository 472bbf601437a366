#pragma once

#include <string>
#include <vector>

#include "blockcheck/cycproduct.hpp"

namespace blockcheck {

/// Integer partition, parts weakly decreasing.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<unsigned> parts);

    const std::vector<unsigned>& parts() const { return parts_; }
    unsigned size() const { return size_; }

    /// Hook lengths of the Young diagram, one per cell (descending order).
    std::vector<unsigned> hooks() const;

    Partition conjugate() const;

    std::string to_string() const;
    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator<(const Partition& o) const { return parts_ < o.parts_; }

private:
    std::vector<unsigned> parts_;
    unsigned size_ = 0;
};

/// All partitions of n, lexicographically descending first part.
std::vector<Partition> partitions_of(unsigned n);

/// r'-part of the unipotent character degree of (twisted) type A attached to a
/// partition of l+1:  (q -+ 1) * |A_l|_{r'} / prod_h (q^h -+ ...), twisted case
/// via (-q)^h - 1 with the global sign discarded.
CycProduct degree_type_a(const Partition& p, bool twisted);

/// 2-defect of the character at odd q: v2(prod_h(q^h - 1)) - v2(q - 1), resp.
/// the (-q)-twisted form.
long defect_type_a(const Partition& p, const Int& q, bool twisted);

}  // namespace blockcheck
