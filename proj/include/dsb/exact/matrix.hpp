#pragma once

#include "dsb/exact/rational.hpp"

#include <cstddef>
#include <vector>

namespace dsb::exact {

using Vector = std::vector<Rational>;

/// Dense row-major matrix over Q with positive dimensions.
class ExactMatrix {
public:
    ExactMatrix(std::size_t rows, std::size_t cols);
    static ExactMatrix from_rows(const std::vector<Vector>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rational& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
    Vector row(std::size_t i) const;
    Vector apply(const Vector& v) const;
    ExactMatrix transposed() const;

private:
    std::size_t rows_, cols_;
    std::vector<Rational> entries_;
};

std::size_t rank(const ExactMatrix& m);
/// Basis of the right kernel. Each vector has its free coordinate set to 1
/// and the other free coordinates 0; empty when the kernel is trivial.
std::vector<Vector> kernel_basis(const ExactMatrix& m);
Rational determinant(const ExactMatrix& m);

/// Kernel of the matrix whose rows are `rows`; with no rows the kernel is
/// the whole space of dimension `cols`.
std::vector<Vector> kernel_of_rows(const std::vector<Vector>& rows, std::size_t cols);
/// Rank of a list of vectors of equal length (0 for an empty list).
std::size_t rank_of(const std::vector<Vector>& vectors);

} // namespace dsb::exact
