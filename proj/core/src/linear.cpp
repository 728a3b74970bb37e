#include "tropscatter/linear.hpp"

#include <algorithm>

namespace tropscatter {

namespace {

/// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(QMatrix& m)
{
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t p = row;
        while (p < m.rows() && m.at(p, col) == 0) ++p;
        if (p == m.rows()) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(row, j), m.at(p, j));
        Rational inv = Rational(1) / m.at(row, col);
        for (std::size_t j = 0; j < m.cols(); ++j) m.at(row, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m.at(i, col) == 0) continue;
            Rational f = m.at(i, col);
            for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) -= f * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

std::size_t rank(const QMatrix& m)
{
    QMatrix c = m;
    return rref(c).size();
}

QMatrix kernel_basis(const QMatrix& m)
{
    QMatrix c = m;
    auto pivots = rref(c);
    std::vector<std::size_t> free_cols;
    {
        std::size_t pi = 0;
        for (std::size_t col = 0; col < m.cols(); ++col) {
            if (pi < pivots.size() && pivots[pi] == col)
                ++pi;
            else
                free_cols.push_back(col);
        }
    }
    QMatrix k(m.cols(), free_cols.size());
    for (std::size_t fi = 0; fi < free_cols.size(); ++fi) {
        std::size_t fc = free_cols[fi];
        k.at(fc, fi) = 1;
        for (std::size_t pi = 0; pi < pivots.size(); ++pi) k.at(pivots[pi], fi) = -c.at(pi, fc);
    }
    return k;
}

QMatrix matmul(const QMatrix& a, const QMatrix& b)
{
    if (a.cols() != b.rows()) throw Error("QMatrix matmul: shape mismatch");
    QMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a.at(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return c;
}

namespace {

/// Phase-1 simplex deciding feasibility of { M y >= b, y free }. Free
/// variables are split as y = y+ - y-; artificials give the starting basis.
/// Bland's rule guarantees termination with exact arithmetic.
bool lp_feasible(const QMatrix& m, const std::vector<Rational>& b)
{
    const std::size_t rows = m.rows();
    const std::size_t ny = m.cols();
    // columns: y+ (ny), y- (ny), slack (rows), artificial (rows)
    const std::size_t cols = 2 * ny + 2 * rows;
    QMatrix t(rows, cols);
    std::vector<Rational> rhs(rows);
    std::vector<std::size_t> basis(rows);

    for (std::size_t i = 0; i < rows; ++i) {
        Rational bi = b[i];
        int sgn = bi >= 0 ? 1 : -1;  // keep rhs nonnegative
        for (std::size_t j = 0; j < ny; ++j) {
            t.at(i, j) = Rational(sgn) * m.at(i, j);
            t.at(i, ny + j) = Rational(-sgn) * m.at(i, j);
        }
        t.at(i, 2 * ny + i) = Rational(-sgn);  // M y - s = b, s >= 0
        t.at(i, 2 * ny + rows + i) = 1;
        rhs[i] = Rational(sgn) * bi;
        basis[i] = 2 * ny + rows + i;
    }

    // objective: minimize sum of artificials; reduced costs via the basis
    auto reduced_cost = [&](std::size_t col) {
        // c_col - sum over rows of (c_basis row) * t(row, col); artificial
        // columns have cost 1, everything else 0.
        Rational rc = col >= 2 * ny + rows ? Rational(1) : Rational(0);
        for (std::size_t i = 0; i < rows; ++i)
            if (basis[i] >= 2 * ny + rows) rc -= t.at(i, col);
        return rc;
    };

    for (;;) {
        // Bland: smallest index with negative reduced cost
        std::size_t enter = cols;
        for (std::size_t j = 0; j < cols; ++j) {
            if (reduced_cost(j) < 0) {
                enter = j;
                break;
            }
        }
        if (enter == cols) break;

        // ratio test, Bland tie-break on basis index
        std::size_t leave = rows;
        Rational best;
        for (std::size_t i = 0; i < rows; ++i) {
            if (t.at(i, enter) <= 0) continue;
            Rational ratio = rhs[i] / t.at(i, enter);
            if (leave == rows || ratio < best ||
                (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave == rows) throw Error("phase-1 simplex unbounded; objective should be >= 0");

        // pivot
        Rational inv = Rational(1) / t.at(leave, enter);
        for (std::size_t j = 0; j < cols; ++j) t.at(leave, j) *= inv;
        rhs[leave] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == leave || t.at(i, enter) == 0) continue;
            Rational f = t.at(i, enter);
            for (std::size_t j = 0; j < cols; ++j) t.at(i, j) -= f * t.at(leave, j);
            rhs[i] -= f * rhs[leave];
        }
        basis[leave] = enter;
    }

    Rational objective(0);
    for (std::size_t i = 0; i < rows; ++i)
        if (basis[i] >= 2 * ny + rows) objective += rhs[i];
    return objective == 0;
}

}  // namespace

bool strictly_feasible(const QMatrix& equalities, const QMatrix& strict_positive)
{
    const std::size_t n = std::max(equalities.cols(), strict_positive.cols());
    const std::size_t rows = 2 * equalities.rows() + strict_positive.rows();
    QMatrix m(rows, n);
    std::vector<Rational> b(rows);
    for (std::size_t i = 0; i < equalities.rows(); ++i) {
        for (std::size_t j = 0; j < equalities.cols(); ++j) {
            m.at(2 * i, j) = equalities.at(i, j);
            m.at(2 * i + 1, j) = -equalities.at(i, j);
        }
    }
    for (std::size_t i = 0; i < strict_positive.rows(); ++i) {
        for (std::size_t j = 0; j < strict_positive.cols(); ++j)
            m.at(2 * equalities.rows() + i, j) = strict_positive.at(i, j);
        b[2 * equalities.rows() + i] = 1;
    }
    return lp_feasible(m, b);
}

}  // namespace tropscatter
