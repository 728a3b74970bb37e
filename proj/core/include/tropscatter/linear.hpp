#pragma once

#include "tropscatter/numeric.hpp"

#include <cstddef>
#include <vector>

namespace tropscatter {

/// Dense rational matrix, row major; only what the tropical realizability
/// checks need.
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rational& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

private:
    std::size_t rows_{0};
    std::size_t cols_{0};
    std::vector<Rational> e_;
};

std::size_t rank(const QMatrix& m);

/// Basis of {x : m x = 0}, one kernel vector per column.
QMatrix kernel_basis(const QMatrix& m);

QMatrix matmul(const QMatrix& a, const QMatrix& b);

/// Exact feasibility of { A x = 0, C x > 0 (componentwise) } for homogeneous
/// rational systems: scale-invariance turns the strict system into
/// { A x = 0, C x >= 1 }, decided by a phase-1 simplex with Bland's rule.
bool strictly_feasible(const QMatrix& equalities, const QMatrix& strict_positive);

}  // namespace tropscatter
