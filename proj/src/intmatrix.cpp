#include "blockcheck/intmatrix.hpp"

#include <sstream>

namespace blockcheck {

IntMatrix IntMatrix::identity(size_t n) {
    IntMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("IntMatrix: dimension mismatch");
    IntMatrix r(rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            const Int& a = at(i, k);
            if (a == 0) continue;
            for (size_t j = 0; j < o.cols_; ++j) r.at(i, j) += a * o.at(k, j);
        }
    return r;
}

bool IntMatrix::is_zero() const {
    for (const Int& x : data_)
        if (x != 0) return false;
    return true;
}

void IntMatrix::swap_rows(size_t i, size_t j) {
    if (i == j) return;
    for (size_t c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

size_t IntMatrix::rank() const { return hermite_normal_form(*this).rank; }

Int IntMatrix::determinant() const {
    if (rows_ != cols_) throw std::invalid_argument("determinant: square matrix required");
    // Fraction-free Gaussian elimination (Bareiss).
    IntMatrix m = *this;
    Int prev = 1;
    int sign = 1;
    size_t n = rows_;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m.at(k, k) == 0) {
            size_t piv = k + 1;
            while (piv < n && m.at(piv, k) == 0) ++piv;
            if (piv == n) return 0;
            m.swap_rows(k, piv);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j) {
                Int t = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                m.at(i, j) = t / prev;
            }
        prev = m.at(k, k);
    }
    return sign > 0 ? m.at(n - 1, n - 1) : Int(-m.at(n - 1, n - 1));
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    for (size_t i = 0; i < rows_; ++i) {
        os << "[";
        for (size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j);
        os << "]";
        if (i + 1 < rows_) os << "\n";
    }
    return os.str();
}

HermiteResult hermite_normal_form(const IntMatrix& a) {
    size_t m = a.rows(), n = a.cols();
    IntMatrix h = a;
    IntMatrix u = IntMatrix::identity(m);
    size_t row = 0;
    for (size_t col = 0; col < n && row < m; ++col) {
        // Clear the column below `row` with extended-gcd row operations.
        size_t piv = row;
        while (piv < m && h.at(piv, col) == 0) ++piv;
        if (piv == m) continue;
        h.swap_rows(row, piv);
        u.swap_rows(row, piv);
        for (size_t i = row + 1; i < m; ++i) {
            while (h.at(i, col) != 0) {
                Int q = h.at(row, col) / h.at(i, col);  // truncated division is fine: loop is a gcd
                for (size_t j = 0; j < n; ++j) h.at(row, j) -= q * h.at(i, j);
                for (size_t j = 0; j < m; ++j) u.at(row, j) -= q * u.at(i, j);
                h.swap_rows(row, i);
                u.swap_rows(row, i);
            }
        }
        if (h.at(row, col) < 0) {
            for (size_t j = 0; j < n; ++j) h.at(row, j) = -h.at(row, j);
            for (size_t j = 0; j < m; ++j) u.at(row, j) = -u.at(row, j);
        }
        // Reduce the entries above the pivot into [0, pivot).
        for (size_t i = 0; i < row; ++i) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), h.at(i, col).get_mpz_t(), h.at(row, col).get_mpz_t());
            if (q != 0) {
                for (size_t j = 0; j < n; ++j) h.at(i, j) -= q * h.at(row, j);
                for (size_t j = 0; j < m; ++j) u.at(i, j) -= q * u.at(row, j);
            }
        }
        ++row;
    }
    return {std::move(h), std::move(u), row};
}

IntMatrix hermite_kernel(const IntMatrix& a) {
    HermiteResult hr = hermite_normal_form(a);
    size_t m = a.rows();
    size_t null_dim = m - hr.rank;
    IntMatrix raw(null_dim, m);
    for (size_t i = 0; i < null_dim; ++i)
        for (size_t j = 0; j < m; ++j) raw.at(i, j) = hr.u.at(hr.rank + i, j);
    // Canonicalise the kernel basis itself.
    HermiteResult canon = hermite_normal_form(raw);
    IntMatrix out(null_dim, m);
    for (size_t i = 0; i < null_dim; ++i)
        for (size_t j = 0; j < m; ++j) out.at(i, j) = canon.h.at(i, j);
    return out;
}

SmithResult smith_normal_form(const IntMatrix& a) {
    size_t m = a.rows(), n = a.cols();
    IntMatrix s = a;
    IntMatrix u = IntMatrix::identity(m);
    IntMatrix v = IntMatrix::identity(n);

    auto col_swap = [&](size_t i, size_t j) {
        if (i == j) return;
        for (size_t r = 0; r < m; ++r) std::swap(s.at(r, i), s.at(r, j));
        for (size_t r = 0; r < n; ++r) std::swap(v.at(r, i), v.at(r, j));
    };
    auto col_addmul = [&](size_t dst, size_t src, const Int& c) {
        for (size_t r = 0; r < m; ++r) s.at(r, dst) += c * s.at(r, src);
        for (size_t r = 0; r < n; ++r) v.at(r, dst) += c * v.at(r, src);
    };
    auto row_addmul = [&](size_t dst, size_t src, const Int& c) {
        for (size_t j = 0; j < n; ++j) s.at(dst, j) += c * s.at(src, j);
        for (size_t j = 0; j < m; ++j) u.at(dst, j) += c * u.at(src, j);
    };

    size_t t = 0;
    while (t < m && t < n) {
        // Find a nonzero pivot.
        size_t pi = t, pj = t;
        bool found = false;
        for (size_t i = t; i < m && !found; ++i)
            for (size_t j = t; j < n && !found; ++j)
                if (s.at(i, j) != 0) {
                    pi = i;
                    pj = j;
                    found = true;
                }
        if (!found) break;
        s.swap_rows(t, pi);
        u.swap_rows(t, pi);
        col_swap(t, pj);

        bool dirty = true;
        while (dirty) {
            dirty = false;
            for (size_t i = t + 1; i < m; ++i) {
                while (s.at(i, t) != 0) {
                    Int q = s.at(t, t) / s.at(i, t);
                    row_addmul(t, i, -q);
                    s.swap_rows(t, i);
                    u.swap_rows(t, i);
                }
            }
            for (size_t j = t + 1; j < n; ++j) {
                while (s.at(t, j) != 0) {
                    Int q = s.at(t, t) / s.at(t, j);
                    col_addmul(t, j, -q);
                    col_swap(t, j);
                    dirty = true;
                }
            }
        }
        for (size_t j = t + 1; j < n; ++j)
            if (s.at(t, j) != 0) throw std::logic_error("smith: row not cleared");
        // Enforce divisibility d_t | entries of the remaining block.
        bool redo = false;
        for (size_t i = t + 1; i < m && !redo; ++i)
            for (size_t j = t + 1; j < n && !redo; ++j)
                if (s.at(i, j) % s.at(t, t) != 0) {
                    row_addmul(t, i, Int(1));
                    redo = true;
                }
        if (redo) continue;
        if (s.at(t, t) < 0) {
            for (size_t j = 0; j < n; ++j) s.at(t, j) = -s.at(t, j);
            for (size_t j = 0; j < m; ++j) u.at(t, j) = -u.at(t, j);
        }
        ++t;
    }
    return {std::move(s), std::move(u), std::move(v)};
}

bool in_row_lattice(const IntMatrix& basis, const std::vector<Int>& v) {
    if (v.size() != basis.cols()) throw std::invalid_argument("in_row_lattice: size mismatch");
    std::vector<Int> w = v;
    for (size_t i = 0; i < basis.rows(); ++i) {
        size_t piv = 0;
        while (piv < basis.cols() && basis.at(i, piv) == 0) ++piv;
        if (piv == basis.cols()) continue;
        if (w[piv] % basis.at(i, piv) != 0) return false;
        Int c = w[piv] / basis.at(i, piv);
        if (c != 0)
            for (size_t j = 0; j < basis.cols(); ++j) w[j] -= c * basis.at(i, j);
    }
    for (const Int& x : w)
        if (x != 0) return false;
    return true;
}

}  // namespace blockcheck
