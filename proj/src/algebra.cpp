#include "oreext/algebra.hpp"

#include "oreext/errors.hpp"

#include <utility>

namespace oreext {

OreAlgebra::OreAlgebra(BasePoly sigma_y, BasePoly delta_y)
    : sigma_y_(std::move(sigma_y)), delta_y_(std::move(delta_y)), s_(0) {
    if (sigma_y_.is_zero()) throw Error(ErrorKind::InvalidArgument, "sigma(y) must be nonzero");
    s_ = sigma_y_.degree_index();
}

std::shared_ptr<const OreAlgebra> OreAlgebra::weyl() {
    return std::make_shared<const OreAlgebra>(BasePoly::variable(), BasePoly::constant(1));
}

std::shared_ptr<const OreAlgebra> OreAlgebra::q_power() {
    return std::make_shared<const OreAlgebra>(BasePoly::monomial(1, 2), BasePoly{});
}

BasePoly OreAlgebra::apply_sigma(const BasePoly& p) const { return p.compose(sigma_y_); }

BasePoly OreAlgebra::apply_sigma_power(const BasePoly& p, std::size_t k) const {
    BasePoly r = p;
    for (std::size_t i = 0; i < k; ++i) r = apply_sigma(r);
    return r;
}

BasePoly OreAlgebra::apply_delta(const BasePoly& p) const {
    // delta(y^n) = sigma(y) delta(y^{n-1}) + delta(y) y^{n-1}, delta(1) = 0
    BasePoly result;
    BasePoly delta_power;                        // delta(y^n)
    BasePoly y_power = BasePoly::constant(1);    // y^n
    for (std::size_t n = 0; n < p.coeffs().size(); ++n) {
        if (n > 0) {
            delta_power = sigma_y_ * delta_power + delta_y_ * y_power;
            y_power = y_power * BasePoly::variable();
        }
        if (sgn(p.coeffs()[n]) != 0 && !delta_power.is_zero()) result += delta_power * p.coeffs()[n];
    }
    return result;
}

std::string OreAlgebra::describe() const {
    return "Q[y][x; y -> " + sigma_y_.to_string() + ", y -> " + delta_y_.to_string() + "]";
}

} // namespace oreext
