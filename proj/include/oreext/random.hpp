#pragma once

#include "oreext/algebra.hpp"
#include "oreext/base_poly.hpp"
#include "oreext/ore_poly.hpp"

#include <cstddef>
#include <random>

namespace oreext {

/// Generators for randomized checks. Coefficients are small rationals
/// (numerators in [-5, 5], denominators in [1, 3]) and roughly half the
/// monomials are left empty.
class RandomElements {
public:
    explicit RandomElements(std::uint64_t seed) : rng_(seed) {}

    Scalar scalar();
    Scalar nonzero_scalar();
    BasePoly base_poly(std::size_t max_deg);
    /// Nonzero polynomial of exactly the given degree.
    BasePoly base_poly_of_degree(std::size_t deg);
    OrePoly ore_poly(const AlgebraPtr& algebra, std::size_t max_x_deg, std::size_t max_y_deg);
    OrePoly nonzero_ore_poly(const AlgebraPtr& algebra, std::size_t max_x_deg, std::size_t max_y_deg);
    std::size_t index(std::size_t upper_inclusive);

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

} // namespace oreext
