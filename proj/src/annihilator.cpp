#include "oreext/annihilator.hpp"

#include "oreext/errors.hpp"
#include "oreext/flatten.hpp"
#include "oreext/linalg.hpp"

#include <algorithm>

namespace oreext {

namespace {

void require_commuting(const OrePoly& p, const OrePoly& q) {
    const OrePoly c = commutator(p, q);
    if (!c.is_zero())
        throw Error(ErrorKind::NotCommuting, "P and Q do not commute: commutator [P, Q] = " + c.to_string() +
                                                 " is nonzero");
}

} // namespace

BivariatePoly::BivariatePoly(std::size_t s_bound, std::size_t t_bound)
    : s_bound_(s_bound), t_bound_(t_bound), grid_((s_bound + 1) * (t_bound + 1)) {}

bool BivariatePoly::is_zero() const {
    return std::all_of(grid_.begin(), grid_.end(), [](const Scalar& c) { return sgn(c) == 0; });
}

void BivariatePoly::normalize() {
    auto first = std::find_if(grid_.begin(), grid_.end(), [](const Scalar& c) { return sgn(c) != 0; });
    if (first == grid_.end()) return;
    const Scalar scale = 1 / *first;
    for (auto& c : grid_) c *= scale;
}

std::vector<BigInt> BivariatePoly::integer_coefficients() const {
    BivariatePoly monic = *this;
    monic.normalize();
    BigInt den = 1;
    for (const auto& c : monic.grid_)
        if (sgn(c) != 0) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    std::vector<BigInt> out;
    out.reserve(grid_.size());
    for (const auto& c : monic.grid_) out.push_back(c.get_num() * (den / c.get_den()));
    return out;
}

std::string BivariatePoly::to_string() const {
    std::string out;
    bool first = true;
    for (std::size_t i = 0; i <= s_bound_; ++i) {
        for (std::size_t j = 0; j <= t_bound_; ++j) {
            const Scalar& c = coeff(i, j);
            if (sgn(c) == 0) continue;
            const bool negative = sgn(c) < 0;
            if (first) {
                if (negative) out += "-";
            } else {
                out += negative ? " - " : " + ";
            }
            first = false;
            std::string mono;
            if (i >= 1) mono = i == 1 ? "s" : "s^" + std::to_string(i);
            if (j >= 1) {
                if (!mono.empty()) mono += "*";
                mono += j == 1 ? "t" : "t^" + std::to_string(j);
            }
            const Scalar mag = abs(c);
            if (mono.empty()) {
                out += mag.get_str();
            } else if (mag == 1) {
                out += mono;
            } else {
                out += mag.get_str() + "*" + mono;
            }
        }
    }
    return first ? "0" : out;
}

OrePoly evaluate(const BivariatePoly& f, const OrePoly& p, const OrePoly& q) {
    require_same_algebra(p, q);
    require_commuting(p, q);
    OrePoly sum(p.algebra_ptr());
    OrePoly p_power = OrePoly::constant(p.algebra_ptr(), 1);
    for (std::size_t i = 0; i <= f.s_bound(); ++i) {
        if (i > 0) p_power = ore_mul(p_power, p);
        OrePoly term = p_power;
        for (std::size_t j = 0; j <= f.t_bound(); ++j) {
            if (j > 0) term = ore_mul(term, q);
            if (sgn(f.coeff(i, j)) != 0) sum += term * f.coeff(i, j);
        }
    }
    return sum;
}

std::optional<BivariatePoly> annihilating_polynomial(const OrePoly& p, const OrePoly& q, std::size_t s_bound,
                                                     std::size_t t_bound) {
    require_same_algebra(p, q);
    if (!p.algebra().is_domain())
        throw Error(ErrorKind::NotDomain,
                    "algebra has s = 0 (sigma(y) is constant): sigma is not injective, S has zero divisors");
    if (p.is_scalar()) throw Error(ErrorKind::Degenerate, "P = " + p.to_string() + " is a scalar");
    require_commuting(p, q);

    // Products p^i q^j in (i, j)-lex order.
    std::vector<OrePoly> products;
    products.reserve((s_bound + 1) * (t_bound + 1));
    OrePoly p_power = OrePoly::constant(p.algebra_ptr(), 1);
    for (std::size_t i = 0; i <= s_bound; ++i) {
        if (i > 0) p_power = ore_mul(p_power, p);
        OrePoly term = p_power;
        for (std::size_t j = 0; j <= t_bound; ++j) {
            if (j > 0) term = ore_mul(term, q);
            products.push_back(term);
        }
    }
    const MonomialGrid grid = MonomialGrid::covering(products);
    std::vector<Vector> columns;
    columns.reserve(products.size());
    for (const auto& prod : products) columns.push_back(flatten(prod, grid));

    // The kernel vector of the first free column has the smallest leading monomial.
    const auto kernel = kernel_basis(Matrix::from_columns(columns, grid.size()));
    if (kernel.empty()) return std::nullopt;

    BivariatePoly f(s_bound, t_bound);
    for (std::size_t i = 0; i <= s_bound; ++i)
        for (std::size_t j = 0; j <= t_bound; ++j) f.coeff(i, j) = kernel.front()[i * (t_bound + 1) + j];
    f.normalize();
    return f;
}

AnnihilatorResult annihilating_polynomial_auto(const OrePoly& p, const OrePoly& q, std::size_t max_doublings) {
    require_same_algebra(p, q);
    if (chi(p) < Degree(1))
        throw Error(ErrorKind::Degenerate, "P = " + p.to_string() + " must have chi(P) > 0 for the doubling search");
    const Degree dq = chi(q);
    std::size_t s_bound = dq.is_bottom() ? 1 : static_cast<std::size_t>(dq.value()) + 1;
    std::size_t t_bound = static_cast<std::size_t>(chi(p).value()) + 1;
    for (std::size_t doublings = 0;; ++doublings) {
        if (auto f = annihilating_polynomial(p, q, s_bound, t_bound))
            return AnnihilatorResult{std::move(*f), s_bound, t_bound, doublings};
        if (doublings == max_doublings) break;
        s_bound *= 2;
        t_bound *= 2;
    }
    throw Error(ErrorKind::BudgetExhausted, "budget exhausted: no annihilating polynomial with s-degree <= " +
                                                std::to_string(s_bound) + " and t-degree <= " +
                                                std::to_string(t_bound));
}

} // namespace oreext
