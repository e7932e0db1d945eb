#include "oreext/random.hpp"

#include <utility>

namespace oreext {

std::size_t RandomElements::index(std::size_t upper_inclusive) {
    return std::uniform_int_distribution<std::size_t>(0, upper_inclusive)(rng_);
}

Scalar RandomElements::scalar() {
    const long num = std::uniform_int_distribution<long>(-5, 5)(rng_);
    const long den = std::uniform_int_distribution<long>(1, 3)(rng_);
    Scalar c(num, den);
    c.canonicalize();
    return c;
}

Scalar RandomElements::nonzero_scalar() {
    for (;;) {
        Scalar c = scalar();
        if (sgn(c) != 0) return c;
    }
}

BasePoly RandomElements::base_poly(std::size_t max_deg) {
    std::vector<Scalar> c(index(max_deg) + 1);
    for (auto& v : c)
        if (index(1) == 1) v = nonzero_scalar();
    return BasePoly(std::move(c));
}

BasePoly RandomElements::base_poly_of_degree(std::size_t deg) {
    std::vector<Scalar> c(deg + 1);
    for (std::size_t i = 0; i < deg; ++i)
        if (index(1) == 1) c[i] = nonzero_scalar();
    c[deg] = nonzero_scalar();
    return BasePoly(std::move(c));
}

OrePoly RandomElements::ore_poly(const AlgebraPtr& algebra, std::size_t max_x_deg, std::size_t max_y_deg) {
    // Occasionally produce zero so the bottom degree is exercised.
    if (index(19) == 0) return OrePoly(algebra);
    std::vector<BasePoly> c(index(max_x_deg) + 1);
    for (auto& v : c) v = base_poly(max_y_deg);
    return OrePoly(algebra, std::move(c));
}

OrePoly RandomElements::nonzero_ore_poly(const AlgebraPtr& algebra, std::size_t max_x_deg, std::size_t max_y_deg) {
    std::vector<BasePoly> c(index(max_x_deg) + 1);
    for (std::size_t i = 0; i + 1 < c.size(); ++i) c[i] = base_poly(max_y_deg);
    c.back() = base_poly_of_degree(index(max_y_deg));
    return OrePoly(algebra, std::move(c));
}

} // namespace oreext
