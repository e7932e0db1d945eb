#include "oreext/linalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace oreext {

namespace {

using IntRow = std::vector<BigInt>;

void make_primitive(IntRow& row) {
    BigInt g = 0;
    for (const auto& v : row) {
        if (sgn(v) == 0) continue;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) return;
    }
    if (g == 0 || g == 1) return;
    for (auto& v : row)
        if (sgn(v) != 0) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

IntRow to_integer_row(const Matrix& m, std::size_t r) {
    BigInt den = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        const Scalar& v = m(r, c);
        if (sgn(v) != 0) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den_mpz_t());
    }
    IntRow row(m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c) {
        const Scalar& v = m(r, c);
        if (sgn(v) == 0) continue;
        row[c] = v.get_num() * (den / v.get_den());
    }
    make_primitive(row);
    return row;
}

} // namespace

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw std::invalid_argument("ragged matrix rows");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& cols, std::size_t rows) {
    Matrix m(rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        if (cols[c].size() != rows) throw std::invalid_argument("column length mismatch");
        for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
    }
    return m;
}

Vector Matrix::operator*(std::span<const Scalar> v) const {
    if (v.size() != cols_) throw std::invalid_argument("dimension mismatch in matrix-vector product");
    Vector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (sgn((*this)(r, c)) != 0 && sgn(v[c]) != 0) out[r] += (*this)(r, c) * v[c];
    return out;
}

RrefResult rref(const Matrix& m) {
    std::vector<IntRow> rows;
    rows.reserve(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        IntRow row = to_integer_row(m, r);
        if (std::any_of(row.begin(), row.end(), [](const BigInt& v) { return sgn(v) != 0; }))
            rows.push_back(std::move(row));
    }

    std::vector<std::size_t> pivots;
    std::size_t next = 0;
    BigInt g, f_pivot, f_row;
    for (std::size_t col = 0; col < m.cols() && next < rows.size(); ++col) {
        // Prefer the pivot with the smallest magnitude to limit coefficient growth.
        std::size_t best = rows.size();
        for (std::size_t r = next; r < rows.size(); ++r) {
            if (sgn(rows[r][col]) == 0) continue;
            if (best == rows.size() || mpz_cmpabs(rows[r][col].get_mpz_t(), rows[best][col].get_mpz_t()) < 0) best = r;
        }
        if (best == rows.size()) continue;
        std::swap(rows[next], rows[best]);
        const IntRow& prow = rows[next];
        std::vector<std::size_t> support;
        for (std::size_t c = col; c < m.cols(); ++c)
            if (sgn(prow[c]) != 0) support.push_back(c);

        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == next || sgn(rows[r][col]) == 0) continue;
            IntRow& row = rows[r];
            mpz_gcd(g.get_mpz_t(), prow[col].get_mpz_t(), row[col].get_mpz_t());
            mpz_divexact(f_pivot.get_mpz_t(), prow[col].get_mpz_t(), g.get_mpz_t());
            mpz_divexact(f_row.get_mpz_t(), row[col].get_mpz_t(), g.get_mpz_t());
            // row <- f_pivot * row - f_row * prow
            if (f_pivot != 1)
                for (auto& v : row)
                    if (sgn(v) != 0) v *= f_pivot;
            for (std::size_t c : support) mpz_submul(row[c].get_mpz_t(), f_row.get_mpz_t(), prow[c].get_mpz_t());
            make_primitive(row);
        }
        pivots.push_back(col);
        ++next;
    }

    RrefResult result{Matrix(m.rows(), m.cols()), pivots};
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        const BigInt& p = rows[i][pivots[i]];
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (sgn(rows[i][c]) == 0) continue;
            Scalar v(rows[i][c], p);
            v.canonicalize();
            result.reduced(i, c) = v;
        }
    }
    return result;
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

std::vector<Vector> kernel_basis(const Matrix& m) {
    const RrefResult r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t p : r.pivots) is_pivot[p] = true;

    std::vector<Vector> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vector v(m.cols());
        v[free] = 1;
        for (std::size_t i = 0; i < r.pivots.size(); ++i) v[r.pivots[i]] = -r.reduced(i, free);
        auto first = std::find_if(v.begin(), v.end(), [](const Scalar& c) { return sgn(c) != 0; });
        const Scalar scale = 1 / *first;
        for (auto& c : v) c *= scale;
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Vector> solve(const Matrix& m, std::span<const Scalar> rhs) {
    if (rhs.size() != m.rows()) throw std::invalid_argument("right-hand side length mismatch");
    Matrix aug(m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
        aug(r, m.cols()) = rhs[r];
    }
    const RrefResult red = rref(aug);
    if (!red.pivots.empty() && red.pivots.back() == m.cols()) return std::nullopt;
    Vector x(m.cols());
    for (std::size_t i = 0; i < red.pivots.size(); ++i) x[red.pivots[i]] = red.reduced(i, m.cols());
    return x;
}

bool is_zero_vector(std::span<const Scalar> v) {
    return std::all_of(v.begin(), v.end(), [](const Scalar& c) { return sgn(c) == 0; });
}

} // namespace oreext
