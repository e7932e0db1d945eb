#include "oreext/linalg.hpp"
#include "oreext/random.hpp"

#include "oracle/naive_ore.hpp"

#include <gtest/gtest.h>

using namespace oreext;

namespace {

Matrix random_matrix(RandomElements& gen, std::size_t rows, std::size_t cols) {
    Matrix m(rows, cols);
    // Build low-rank matrices often so kernels are nontrivial.
    const std::size_t r = gen.index(std::min(rows, cols));
    std::vector<Vector> basis;
    for (std::size_t k = 0; k < r; ++k) {
        Vector v(cols);
        for (auto& c : v) c = gen.scalar();
        basis.push_back(std::move(v));
    }
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t k = 0; k < r; ++k) {
            const Scalar w = gen.scalar();
            for (std::size_t j = 0; j < cols; ++j) m(i, j) += w * basis[k][j];
        }
    return m;
}

std::vector<std::vector<Scalar>> rows_of(const Matrix& m) {
    std::vector<std::vector<Scalar>> out(m.rows(), std::vector<Scalar>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j);
    return out;
}

} // namespace

TEST(Rref, Examples) {
    const auto id = rref(Matrix::identity(3));
    EXPECT_EQ(id.reduced, Matrix::identity(3));
    EXPECT_EQ(id.pivots, (std::vector<std::size_t>{0, 1, 2}));

    const auto zero = rref(Matrix(2, 3));
    EXPECT_EQ(zero.reduced, Matrix(2, 3));
    EXPECT_TRUE(zero.pivots.empty());

    const auto r1 = rref(Matrix::from_rows({{1, 2}, {2, 4}}));
    EXPECT_EQ(r1.reduced, Matrix::from_rows({{1, 2}, {0, 0}}));
    EXPECT_EQ(r1.pivots, (std::vector<std::size_t>{0}));
}

TEST(Rref, RationalEntries) {
    const Matrix m = Matrix::from_rows({{Scalar(1, 2), Scalar(1, 3)}, {Scalar(2, 5), 7}});
    EXPECT_EQ(rref(m).reduced, Matrix::identity(2));
    const Matrix d = Matrix::from_rows({{Scalar(1, 2), Scalar(1, 3), 1}, {Scalar(3, 2), 1, 3}});
    EXPECT_EQ(rref(d).reduced, Matrix::from_rows({{1, Scalar(2, 3), 2}, {0, 0, 0}}));
}

TEST(KernelBasis, Examples) {
    EXPECT_TRUE(kernel_basis(Matrix::identity(2)).empty());
    EXPECT_EQ(kernel_basis(Matrix(2, 3)).size(), 3u);
    const Matrix m = Matrix::from_rows({{1, 1, 0}});
    const auto k = kernel_basis(m);
    ASSERT_EQ(k.size(), 2u);
    for (const auto& v : k) {
        EXPECT_TRUE(is_zero_vector(m * v));
        EXPECT_EQ(v[0] != 0 ? v[0] : v[1] != 0 ? v[1] : v[2], Scalar(1));
    }
}

TEST(Solve, ConsistentAndInconsistent) {
    const Matrix m = Matrix::from_rows({{1, 2}, {2, 4}});
    const Vector good{3, 6};
    auto x = solve(m, good);
    ASSERT_TRUE(x.has_value());
    EXPECT_EQ(m * *x, good);
    EXPECT_FALSE(solve(m, Vector{3, 7}).has_value());
}

TEST(LinalgProperties, RandomMatrices) {
    RandomElements gen(31);
    for (int t = 0; t < 60; ++t) {
        const std::size_t rows = 1 + gen.index(6), cols = 1 + gen.index(6);
        const Matrix m = random_matrix(gen, rows, cols);
        const auto red = rref(m);
        const auto ker = kernel_basis(m);
        for (const auto& v : ker) EXPECT_TRUE(is_zero_vector(m * v));
        EXPECT_EQ(red.pivots.size() + ker.size(), cols);
        EXPECT_EQ(rref(red.reduced).reduced, red.reduced);
        EXPECT_EQ(red.pivots.size(), oracle::rank(rows_of(m)));
        // Kernel vectors are independent.
        if (!ker.empty()) EXPECT_EQ(rank(Matrix::from_rows(ker)), ker.size());
    }
}
