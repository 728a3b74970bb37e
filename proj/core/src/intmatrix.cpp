#include "tropscatter/intmatrix.hpp"

#include <algorithm>
#include <utility>

namespace tropscatter {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries)
    : rows_(rows), cols_(cols), e_(std::move(entries))
{
    if (e_.size() != rows * cols) throw Error("IntMatrix: entry count does not match shape");
}

IntMatrix IntMatrix::identity(std::size_t n)
{
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::diagonal(const std::vector<Int>& d)
{
    IntMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
    return m;
}

IntMatrix IntMatrix::transposed() const
{
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

IntMatrix matmul(const IntMatrix& a, const IntMatrix& b)
{
    if (a.cols() != b.rows()) throw Error("matmul: shape mismatch");
    IntMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a.at(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return c;
}

namespace {

void swap_rows(IntMatrix& m, IntMatrix& left, std::size_t i, std::size_t j)
{
    for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m.at(i, k), m.at(j, k));
    for (std::size_t k = 0; k < left.cols(); ++k) std::swap(left.at(i, k), left.at(j, k));
}

void swap_cols(IntMatrix& m, IntMatrix& right, std::size_t i, std::size_t j)
{
    for (std::size_t k = 0; k < m.rows(); ++k) std::swap(m.at(k, i), m.at(k, j));
    for (std::size_t k = 0; k < right.rows(); ++k) std::swap(right.at(k, i), right.at(k, j));
}

// row_i -= q * row_j
void row_axpy(IntMatrix& m, IntMatrix& left, std::size_t i, std::size_t j, const Int& q)
{
    for (std::size_t k = 0; k < m.cols(); ++k) m.at(i, k) -= q * m.at(j, k);
    for (std::size_t k = 0; k < left.cols(); ++k) left.at(i, k) -= q * left.at(j, k);
}

// col_i -= q * col_j
void col_axpy(IntMatrix& m, IntMatrix& right, std::size_t i, std::size_t j, const Int& q)
{
    for (std::size_t k = 0; k < m.rows(); ++k) m.at(k, i) -= q * m.at(k, j);
    for (std::size_t k = 0; k < right.rows(); ++k) right.at(k, i) -= q * right.at(k, j);
}

}  // namespace

SmithResult smith_normal_form(const IntMatrix& input)
{
    IntMatrix m = input;
    IntMatrix left = IntMatrix::identity(m.rows());
    IntMatrix right = IntMatrix::identity(m.cols());
    const std::size_t n = std::min(m.rows(), m.cols());

    for (std::size_t s = 0; s < n; ++s) {
        // Pick the smallest nonzero |entry| in the lower-right block as pivot.
        bool found = false;
        std::size_t pi = s, pj = s;
        Int best;
        for (std::size_t i = s; i < m.rows(); ++i)
            for (std::size_t j = s; j < m.cols(); ++j) {
                if (m.at(i, j) == 0) continue;
                Int a = abs_int(m.at(i, j));
                if (!found || a < best) {
                    found = true;
                    best = a;
                    pi = i;
                    pj = j;
                }
            }
        if (!found) break;
        swap_rows(m, left, s, pi);
        swap_cols(m, right, s, pj);

        // Euclid in the pivot row and column until everything divides.
        for (;;) {
            bool dirty = false;
            for (std::size_t i = s + 1; i < m.rows(); ++i) {
                if (m.at(i, s) == 0) continue;
                Int q = m.at(i, s) / m.at(s, s);
                row_axpy(m, left, i, s, q);
                if (m.at(i, s) != 0) {
                    swap_rows(m, left, s, i);
                    dirty = true;
                }
            }
            for (std::size_t j = s + 1; j < m.cols(); ++j) {
                if (m.at(s, j) == 0) continue;
                Int q = m.at(s, j) / m.at(s, s);
                col_axpy(m, right, j, s, q);
                if (m.at(s, j) != 0) {
                    swap_cols(m, right, s, j);
                    dirty = true;
                }
            }
            if (dirty) continue;

            // Pivot divides its row and column; force divisibility of the
            // remaining block so the divisor chain d_1 | d_2 | ... holds.
            bool fixed = true;
            for (std::size_t i = s + 1; i < m.rows() && fixed; ++i)
                for (std::size_t j = s + 1; j < m.cols() && fixed; ++j) {
                    if (m.at(i, j) % m.at(s, s) != 0) {
                        // add row i to row s, creating an entry the pivot
                        // does not divide, and loop again
                        row_axpy(m, left, s, i, Int(-1));
                        fixed = false;
                    }
                }
            if (fixed) break;
        }
    }

    SmithResult r;
    r.divisors.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        r.divisors[i] = abs_int(m.at(i, i));
    }
    r.left = std::move(left);
    r.right = std::move(right);
    return r;
}

std::size_t rank(const IntMatrix& m)
{
    auto s = smith_normal_form(m);
    std::size_t r = 0;
    for (const auto& d : s.divisors)
        if (d != 0) ++r;
    return r;
}

std::optional<Int> cokernel_order(const IntMatrix& m, bool torsion_only)
{
    auto s = smith_normal_form(m);
    std::size_t r = 0;
    Int torsion = 1;
    for (const auto& d : s.divisors) {
        if (d != 0) {
            ++r;
            torsion *= d;
        }
    }
    if (!torsion_only && r < m.rows()) return std::nullopt;  // free rank > 0
    return torsion;
}

IntMatrix integer_kernel(const IntMatrix& m)
{
    // m V = left^{-1} diag(d); kernel basis = columns of V past the rank.
    auto s = smith_normal_form(m);
    std::size_t r = 0;
    for (const auto& d : s.divisors)
        if (d != 0) ++r;
    IntMatrix k(m.cols(), m.cols() - r);
    for (std::size_t j = r; j < m.cols(); ++j)
        for (std::size_t i = 0; i < m.cols(); ++i) k.at(i, j - r) = s.right.at(i, j);
    return k;
}

}  // namespace tropscatter
