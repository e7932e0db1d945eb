#pragma once

#include "oreext/linalg.hpp"
#include "oreext/ore_poly.hpp"

#include <cstddef>

namespace oreext {

/// Coordinates over the monomials y^j x^i with i <= max_x, j <= max_y, in the
/// order (i ascending, j ascending). Shared by the centralizer and annihilator
/// computations.
struct MonomialGrid {
    std::size_t max_x = 0;
    std::size_t max_y = 0;

    std::size_t size() const { return (max_x + 1) * (max_y + 1); }
    std::size_t index(std::size_t x_power, std::size_t y_power) const { return x_power * (max_y + 1) + y_power; }
    std::size_t x_power(std::size_t idx) const { return idx / (max_y + 1); }
    std::size_t y_power(std::size_t idx) const { return idx % (max_y + 1); }

    /// Smallest grid containing every monomial of the given elements.
    static MonomialGrid covering(std::span<const OrePoly> elements);
};

/// Throws InvalidArgument if p has a monomial outside the grid.
Vector flatten(const OrePoly& p, const MonomialGrid& grid);
OrePoly unflatten(std::span<const Scalar> coords, const MonomialGrid& grid, const AlgebraPtr& algebra);

} // namespace oreext
