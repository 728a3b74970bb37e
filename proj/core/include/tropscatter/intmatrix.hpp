#pragma once

#include "tropscatter/numeric.hpp"

#include <optional>
#include <vector>

namespace tropscatter {

/// Dense matrix of arbitrary-precision integers. Rows index the target
/// lattice, columns the source; the cokernel of the column span is what
/// the multiplicities k_tau, k_omega are made of.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}
    IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries);

    static IntMatrix identity(std::size_t n);
    static IntMatrix diagonal(const std::vector<Int>& d);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    bool operator==(const IntMatrix&) const = default;

    IntMatrix transposed() const;

private:
    std::size_t rows_{0};
    std::size_t cols_{0};
    std::vector<Int> e_;
};

struct SmithResult {
    /// Nonnegative elementary divisors d_1 | d_2 | ... (trailing zeros kept
    /// up to min(rows, cols)).
    std::vector<Int> divisors;
    /// Unimodular U, V with U * m * V = diag(divisors).
    IntMatrix left;
    IntMatrix right;
};

/// Smith normal form over Z, with the unimodular transforms.
SmithResult smith_normal_form(const IntMatrix& m);

/// Rank over Q.
std::size_t rank(const IntMatrix& m);

/// Order of coker(m) = Z^rows / colspan(m), or of its torsion subgroup.
/// Returns nullopt for "infinite" (only possible with torsion_only = false).
std::optional<Int> cokernel_order(const IntMatrix& m, bool torsion_only);

/// Basis of the saturated integer kernel {x in Z^cols : m x = 0}, as columns.
IntMatrix integer_kernel(const IntMatrix& m);

IntMatrix matmul(const IntMatrix& a, const IntMatrix& b);

}  // namespace tropscatter
