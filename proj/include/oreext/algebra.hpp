#pragma once

#include "oreext/base_poly.hpp"

#include <cstddef>
#include <memory>
#include <string>

namespace oreext {

/// Presentation of S = K[y][x; sigma, delta]. sigma is the K-algebra
/// endomorphism y -> sigma_y and delta the K-linear sigma-derivation
/// y -> delta_y.
class OreAlgebra {
public:
    OreAlgebra(BasePoly sigma_y, BasePoly delta_y);

    static std::shared_ptr<const OreAlgebra> weyl();
    static std::shared_ptr<const OreAlgebra> q_power();  // sigma(y) = y^2, delta = 0

    const BasePoly& sigma_y() const { return sigma_y_; }
    const BasePoly& delta_y() const { return delta_y_; }
    /// s = deg_y sigma(y).
    std::size_t s() const { return s_; }
    /// sigma is injective, so S is a domain and the x-degree is multiplicative.
    bool is_domain() const { return s_ >= 1; }

    BasePoly apply_sigma(const BasePoly& p) const;
    BasePoly apply_sigma_power(const BasePoly& p, std::size_t k) const;
    BasePoly apply_delta(const BasePoly& p) const;

    std::string describe() const;

    friend bool operator==(const OreAlgebra& a, const OreAlgebra& b) {
        return a.sigma_y_ == b.sigma_y_ && a.delta_y_ == b.delta_y_;
    }

private:
    BasePoly sigma_y_;
    BasePoly delta_y_;
    std::size_t s_;
};

using AlgebraPtr = std::shared_ptr<const OreAlgebra>;

} // namespace oreext
