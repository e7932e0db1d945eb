#pragma once

#include "oreext/algebra.hpp"
#include "oreext/base_poly.hpp"
#include "oreext/degree.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace oreext {

/// Element sum_i a_i x^i of S = K[y][x; sigma, delta], stored in the unique
/// normal form with all powers of x on the right.
class OrePoly {
public:
    explicit OrePoly(AlgebraPtr algebra);
    OrePoly(AlgebraPtr algebra, std::vector<BasePoly> coeffs);

    static OrePoly constant(AlgebraPtr algebra, const Scalar& c);
    static OrePoly from_base(AlgebraPtr algebra, BasePoly r);
    static OrePoly x(AlgebraPtr algebra);
    /// c * y^j * x^i
    static OrePoly monomial(AlgebraPtr algebra, const Scalar& c, std::size_t y_power, std::size_t x_power);

    const OreAlgebra& algebra() const { return *algebra_; }
    const AlgebraPtr& algebra_ptr() const { return algebra_; }

    bool is_zero() const { return coeffs_.empty(); }
    /// True iff the element lies in K.
    bool is_scalar() const;
    /// True iff the element lies in K[y].
    bool in_base_ring() const { return coeffs_.size() <= 1; }

    const std::vector<BasePoly>& coeffs() const { return coeffs_; }
    const BasePoly& coeff(std::size_t x_power) const;
    /// Largest y-degree over all coefficients (bottom for zero).
    Degree max_y_degree() const;

    OrePoly& operator+=(const OrePoly& other);
    OrePoly& operator-=(const OrePoly& other);
    OrePoly& operator*=(const Scalar& c);

    friend OrePoly operator+(OrePoly p, const OrePoly& q) { return p += q; }
    friend OrePoly operator-(OrePoly p, const OrePoly& q) { return p -= q; }
    friend OrePoly operator*(OrePoly p, const Scalar& c) { return p *= c; }
    friend OrePoly operator*(const Scalar& c, OrePoly p) { return p *= c; }
    friend OrePoly operator*(const OrePoly& p, const OrePoly& q);
    OrePoly operator-() const;

    /// Same algebra (by value) and same normal form.
    friend bool operator==(const OrePoly& p, const OrePoly& q);

    /// Canonical text: descending x-power, then descending y-power, e.g. "y*x + 1".
    std::string to_string() const;

private:
    void trim();
    AlgebraPtr algebra_;
    std::vector<BasePoly> coeffs_;
};

/// x * r = sigma(r) x + delta(r).
OrePoly x_times(const BasePoly& r, const AlgebraPtr& algebra);
OrePoly ore_mul(const OrePoly& p, const OrePoly& q);
OrePoly commutator(const OrePoly& p, const OrePoly& q);
OrePoly pow(const OrePoly& p, std::size_t k);

/// Degree in x; -inf for zero.
Degree chi(const OrePoly& p);
/// Coefficient of the highest power of x. Throws on zero.
const BasePoly& leading_coeff(const OrePoly& p);

/// Throws AlgebraMismatch unless both operands live in the same algebra.
void require_same_algebra(const OrePoly& p, const OrePoly& q);

} // namespace oreext
