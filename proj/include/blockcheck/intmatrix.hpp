#pragma once

#include <vector>

#include "blockcheck/numutil.hpp"

namespace blockcheck {

/// Dense matrix over Z.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Int(0)) {}

    static IntMatrix identity(size_t n);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    Int& at(size_t r, size_t c) { return data_[r * cols_ + c]; }
    const Int& at(size_t r, size_t c) const { return data_[r * cols_ + c]; }

    bool operator==(const IntMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

    IntMatrix operator*(const IntMatrix& o) const;
    bool is_zero() const;
    void swap_rows(size_t i, size_t j);

    /// Rank over Q (fraction-free elimination).
    size_t rank() const;

    Int determinant() const;  // square matrices only

    std::string to_string() const;

private:
    size_t rows_ = 0, cols_ = 0;
    std::vector<Int> data_;
};

/// Row-style Hermite normal form: returns H and unimodular U with U*A = H.
/// Pivots positive, entries above each pivot reduced into [0, pivot).
struct HermiteResult {
    IntMatrix h;
    IntMatrix u;
    size_t rank = 0;
};
HermiteResult hermite_normal_form(const IntMatrix& a);

/// Basis of the left integer kernel {x : x*A = 0}, rows in HNF-canonical form.
IntMatrix hermite_kernel(const IntMatrix& a);

/// Smith normal form: diag(d_1 | d_2 | ...) with U*A*V = S, U,V unimodular.
struct SmithResult {
    IntMatrix s;
    IntMatrix u;
    IntMatrix v;
};
SmithResult smith_normal_form(const IntMatrix& a);

/// Membership test of v in the row lattice of an HNF basis.
bool in_row_lattice(const IntMatrix& hnf_basis, const std::vector<Int>& v);

}  // namespace blockcheck
