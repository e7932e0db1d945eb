#pragma once

#include "oreext/scalar.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace oreext {

using Vector = std::vector<Scalar>;

/// Dense row-major matrix over Q.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    static Matrix identity(std::size_t n);
    static Matrix from_rows(const std::vector<Vector>& rows);
    static Matrix from_columns(const std::vector<Vector>& cols, std::size_t rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Vector operator*(std::span<const Scalar> v) const;

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

struct RrefResult {
    Matrix reduced;
    std::vector<std::size_t> pivots;
};

/// Reduced row echelon form. Elimination runs on primitive integer rows
/// (denominators cleared, content divided out after each step); pivot rows
/// are scaled to a leading 1 only at the end.
RrefResult rref(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Basis of the right null space, one vector per free column in ascending
/// order. Each vector is scaled so its first nonzero entry is 1.
std::vector<Vector> kernel_basis(const Matrix& m);

/// Some solution of m * v = rhs, or nullopt if the system is inconsistent.
std::optional<Vector> solve(const Matrix& m, std::span<const Scalar> rhs);

bool is_zero_vector(std::span<const Scalar> v);

} // namespace oreext
