#pragma once

#include "oreext/ore_poly.hpp"
#include "oreext/scalar.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace oreext {

/// f(s, t) = sum c_ij s^i t^j with i <= s_bound, j <= t_bound.
class BivariatePoly {
public:
    BivariatePoly(std::size_t s_bound, std::size_t t_bound);

    std::size_t s_bound() const { return s_bound_; }
    std::size_t t_bound() const { return t_bound_; }
    const Scalar& coeff(std::size_t i, std::size_t j) const { return grid_[i * (t_bound_ + 1) + j]; }
    Scalar& coeff(std::size_t i, std::size_t j) { return grid_[i * (t_bound_ + 1) + j]; }

    bool is_zero() const;
    /// Scales so the first nonzero coefficient in (i, j)-lex order is 1.
    void normalize();
    /// Multiple with coprime integer coefficients (positive first coefficient).
    std::vector<BigInt> integer_coefficients() const;

    /// Terms "c*s^i*t^j" in ascending (i, j)-lex order, e.g. "t^2 - s^3".
    std::string to_string() const;

    friend bool operator==(const BivariatePoly&, const BivariatePoly&) = default;

private:
    std::size_t s_bound_;
    std::size_t t_bound_;
    std::vector<Scalar> grid_;
};

/// f(p, q). Throws NotCommuting if [p, q] != 0.
OrePoly evaluate(const BivariatePoly& f, const OrePoly& p, const OrePoly& q);

/// Kernel vector of the products p^i q^j (i <= s_bound, j <= t_bound) with the
/// smallest (i, j)-lex leading monomial, normalized. nullopt if the products
/// are linearly independent.
std::optional<BivariatePoly> annihilating_polynomial(const OrePoly& p, const OrePoly& q,
                                                     std::size_t s_bound, std::size_t t_bound);

struct AnnihilatorResult {
    BivariatePoly f;
    std::size_t s_bound = 0;
    std::size_t t_bound = 0;
    std::size_t doublings = 0;
};

/// Starts at s_bound = chi(q) + 1, t_bound = chi(p) + 1 and doubles both until
/// an annihilator appears. Throws BudgetExhausted after max_doublings.
AnnihilatorResult annihilating_polynomial_auto(const OrePoly& p, const OrePoly& q, std::size_t max_doublings = 5);

} // namespace oreext
