#include "oreext/flatten.hpp"

#include "oreext/errors.hpp"

#include <algorithm>

namespace oreext {

MonomialGrid MonomialGrid::covering(std::span<const OrePoly> elements) {
    MonomialGrid grid;
    for (const auto& p : elements) {
        if (p.is_zero()) continue;
        grid.max_x = std::max<std::size_t>(grid.max_x, p.coeffs().size() - 1);
        const Degree dy = p.max_y_degree();
        if (!dy.is_bottom()) grid.max_y = std::max<std::size_t>(grid.max_y, static_cast<std::size_t>(dy.value()));
    }
    return grid;
}

Vector flatten(const OrePoly& p, const MonomialGrid& grid) {
    Vector v(grid.size());
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        const auto& c = p.coeffs()[i].coeffs();
        if (c.empty()) continue;
        if (i > grid.max_x || c.size() - 1 > grid.max_y)
            throw Error(ErrorKind::InvalidArgument, "element " + p.to_string() + " does not fit the monomial grid");
        for (std::size_t j = 0; j < c.size(); ++j) v[grid.index(i, j)] = c[j];
    }
    return v;
}

OrePoly unflatten(std::span<const Scalar> coords, const MonomialGrid& grid, const AlgebraPtr& algebra) {
    std::vector<BasePoly> coeffs(grid.max_x + 1);
    for (std::size_t i = 0; i <= grid.max_x; ++i) {
        std::vector<Scalar> c(grid.max_y + 1);
        for (std::size_t j = 0; j <= grid.max_y; ++j) c[j] = coords[grid.index(i, j)];
        coeffs[i] = BasePoly(std::move(c));
    }
    return OrePoly(algebra, std::move(coeffs));
}

} // namespace oreext
