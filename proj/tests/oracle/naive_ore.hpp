#pragma once

// Test-only reference implementation. Shares nothing with the library except
// mpq_class: elements are sparse maps, products are expanded monomial by
// monomial with the closed form
//   delta(y^c) = sum_{k<c} sigma(y)^k delta(y) y^(c-1-k)
// and linear algebra is textbook Gauss-Jordan over Q.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <map>
#include <utility>
#include <vector>

namespace oracle {

using Q = mpq_class;
/// y-polynomial: power -> coefficient.
using YPoly = std::map<std::size_t, Q>;
/// Operator: (x power, y power) -> coefficient of y^j x^i.
using Op = std::map<std::pair<std::size_t, std::size_t>, Q>;

inline void prune(YPoly& p) {
    for (auto it = p.begin(); it != p.end();) it = (it->second == 0) ? p.erase(it) : std::next(it);
}
inline void prune(Op& p) {
    for (auto it = p.begin(); it != p.end();) it = (it->second == 0) ? p.erase(it) : std::next(it);
}

inline YPoly ymul(const YPoly& a, const YPoly& b) {
    YPoly r;
    for (const auto& [i, c] : a)
        for (const auto& [j, d] : b) r[i + j] += c * d;
    prune(r);
    return r;
}

inline YPoly yadd(YPoly a, const YPoly& b, const Q& scale = 1) {
    for (const auto& [j, d] : b) a[j] += scale * d;
    prune(a);
    return a;
}

inline YPoly ypow(const YPoly& a, std::size_t k) {
    YPoly r{{0, Q(1)}};
    for (std::size_t i = 0; i < k; ++i) r = ymul(r, a);
    return r;
}

struct Algebra {
    YPoly sigma_y;
    YPoly delta_y;

    YPoly sigma(const YPoly& p) const {
        YPoly r;
        for (const auto& [j, c] : p) r = yadd(r, ypow(sigma_y, j), c);
        return r;
    }
    YPoly delta(const YPoly& p) const {
        YPoly r;
        for (const auto& [n, c] : p) {
            for (std::size_t k = 0; k < n; ++k) {
                YPoly term = ymul(ymul(ypow(sigma_y, k), delta_y), YPoly{{n - 1 - k, Q(1)}});
                r = yadd(r, term, c);
            }
        }
        return r;
    }
    /// x^i * r expanded as x-power -> coefficient.
    std::map<std::size_t, YPoly> x_power_times(std::size_t i, const YPoly& r) const {
        std::map<std::size_t, YPoly> cur{{0, r}};
        for (std::size_t step = 0; step < i; ++step) {
            std::map<std::size_t, YPoly> next;
            for (const auto& [k, c] : cur) {
                next[k + 1] = yadd(next[k + 1], sigma(c));
                next[k] = yadd(next[k], delta(c));
            }
            cur = std::move(next);
        }
        return cur;
    }

    Op mul(const Op& a, const Op& b) const {
        Op r;
        for (const auto& [ma, ca] : a) {
            for (const auto& [mb, cb] : b) {
                // (ca y^ja x^ia)(cb y^jb x^ib)
                const auto expanded = x_power_times(ma.first, YPoly{{mb.second, Q(1)}});
                for (const auto& [k, coeff] : expanded) {
                    for (const auto& [j, c] : coeff) r[{k + mb.first, j + ma.second}] += ca * cb * c;
                }
            }
        }
        prune(r);
        return r;
    }
};

inline Op op_add(Op a, const Op& b, const Q& scale = 1) {
    for (const auto& [m, c] : b) a[m] += scale * c;
    prune(a);
    return a;
}

inline std::size_t rank(std::vector<std::vector<Q>> m) {
    std::size_t r = 0;
    const std::size_t cols = m.empty() ? 0 : m[0].size();
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t p = r;
        while (p < m.size() && m[p][c] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[r]);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][c] == 0) continue;
            const Q f = m[i][c] / m[r][c];
            for (std::size_t k = 0; k < cols; ++k) m[i][k] -= f * m[r][k];
        }
        ++r;
    }
    return r;
}

/// Kernel of m (rows x cols) as a list of vectors, textbook Gauss-Jordan.
inline std::vector<std::vector<Q>> kernel(std::vector<std::vector<Q>> m, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t p = r;
        while (p < m.size() && m[p][c] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[r]);
        const Q inv = 1 / m[r][c];
        for (auto& v : m[r]) v *= inv;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][c] == 0) continue;
            const Q f = m[i][c];
            for (std::size_t k = 0; k < cols; ++k) m[i][k] -= f * m[r][k];
        }
        pivots.push_back(c);
        ++r;
    }
    std::vector<std::vector<Q>> out;
    for (std::size_t f = 0; f < cols; ++f) {
        if (std::find(pivots.begin(), pivots.end(), f) != pivots.end()) continue;
        std::vector<Q> v(cols);
        v[f] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][f];
        out.push_back(std::move(v));
    }
    return out;
}

/// Brute-force centralizer slice: all b = sum c_ij y^j x^i (i <= n, j <= d)
/// with ab = ba, returned as operators.
inline std::vector<Op> centralizer_slice(const Algebra& alg, const Op& a, std::size_t n, std::size_t d) {
    std::vector<std::pair<std::size_t, std::size_t>> unknowns;
    for (std::size_t i = 0; i <= n; ++i)
        for (std::size_t j = 0; j <= d; ++j) unknowns.emplace_back(i, j);
    std::vector<Op> images;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> row_of;
    for (const auto& u : unknowns) {
        Op mono{{u, Q(1)}};
        Op img = op_add(alg.mul(a, mono), alg.mul(mono, a), -1);
        for (const auto& [m, c] : img) row_of.emplace(m, row_of.size());
        images.push_back(std::move(img));
    }
    std::vector<std::vector<Q>> mat(row_of.size(), std::vector<Q>(unknowns.size()));
    for (std::size_t k = 0; k < images.size(); ++k)
        for (const auto& [m, c] : images[k]) mat[row_of.at(m)][k] = c;
    std::vector<Op> out;
    for (const auto& v : kernel(mat, unknowns.size())) {
        Op b;
        for (std::size_t k = 0; k < v.size(); ++k)
            if (v[k] != 0) b[unknowns[k]] = v[k];
        out.push_back(std::move(b));
    }
    return out;
}

} // namespace oracle
