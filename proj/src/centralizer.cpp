#include "oreext/centralizer.hpp"

#include "oreext/errors.hpp"
#include "oreext/flatten.hpp"
#include "oreext/linalg.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <utility>

namespace oreext {

namespace {

void require_slice_input(const OrePoly& a) {
    if (!a.algebra().is_domain())
        throw Error(ErrorKind::NotDomain,
                    "algebra has s = 0 (sigma(y) is constant): sigma is not injective, S has zero divisors");
    if (a.is_scalar())
        throw Error(ErrorKind::Degenerate, "a = " + a.to_string() + " is a scalar; its centralizer is all of S");
}

// Scale so the top coefficient of the leading coefficient is 1.
OrePoly normalize_leading(OrePoly p) {
    const Scalar inv = 1 / leading_coeff(p).leading();
    return p * inv;
}

} // namespace

std::vector<std::size_t> CentralizerSlice::count_by_degree() const {
    std::vector<std::size_t> counts(max_degree + 1, 0);
    for (const auto& b : basis) ++counts[static_cast<std::size_t>(chi(b).value())];
    return counts;
}

CentralizerSlice centralizer_slice(const OrePoly& a, std::size_t max_degree, std::size_t coeff_bound) {
    require_slice_input(a);
    const AlgebraPtr& algebra = a.algebra_ptr();
    const MonomialGrid unknowns{max_degree, coeff_bound};

    // Column k of the system is [a, y^j x^i] for the k-th monomial of the grid.
    std::vector<OrePoly> images;
    images.reserve(unknowns.size());
    for (std::size_t k = 0; k < unknowns.size(); ++k)
        images.push_back(commutator(a, OrePoly::monomial(algebra, 1, unknowns.y_power(k), unknowns.x_power(k))));
    const MonomialGrid equations = MonomialGrid::covering(images);

    std::vector<Vector> columns;
    columns.reserve(images.size());
    for (const auto& img : images) columns.push_back(flatten(img, equations));
    const Matrix system = Matrix::from_columns(columns, equations.size());

    CentralizerSlice slice{a, max_degree, coeff_bound, {}};
    // One kernel vector per free column, ascending; the free column is the
    // vector's last nonzero coordinate, i.e. its leading monomial.
    for (const auto& v : kernel_basis(system))
        slice.basis.push_back(normalize_leading(unflatten(v, unknowns, algebra)));
    return slice;
}

std::size_t default_coeff_bound(const OrePoly& a, std::size_t max_degree) {
    std::size_t bound = 4;
    const Degree dy = a.max_y_degree();
    if (!dy.is_bottom()) bound = std::max<std::size_t>(bound, static_cast<std::size_t>(dy.value()));
    if (a.algebra().s() >= 2 && chi(a) >= Degree(1)) {
        for (std::size_t n = 0; n <= max_degree; ++n)
            if (auto d = leading_coeff_degree_bound(a, n)) bound = std::max<std::size_t>(bound, static_cast<std::size_t>(*d));
    }
    return bound;
}

AutoSliceResult centralizer_slice_auto(const OrePoly& a, std::size_t max_degree, std::size_t max_doublings) {
    std::size_t bound = default_coeff_bound(a, max_degree);
    AutoSliceResult result{centralizer_slice(a, max_degree, bound), false, 0};
    while (result.doublings < max_doublings) {
        bound *= 2;
        CentralizerSlice next = centralizer_slice(a, max_degree, bound);
        ++result.doublings;
        if (next.count_by_degree() == result.slice.count_by_degree()) {
            result.stabilized = true;
            return result;
        }
        result.slice = std::move(next);
    }
    return result;
}

std::optional<std::int64_t> leading_coeff_degree_bound(const OrePoly& a, std::size_t n) {
    const std::size_t s = a.algebra().s();
    if (s < 2) throw Error(ErrorKind::InvalidArgument, "leading-coefficient balance requires s >= 2 (s = " + std::to_string(s) + ")");
    if (chi(a) < Degree(1)) throw Error(ErrorKind::Degenerate, "leading-coefficient balance requires a outside K[y]");
    const auto m = static_cast<unsigned long>(chi(a).value());
    const BigInt deg_am = static_cast<unsigned long>(leading_coeff(a).degree_index());

    // deg(a_m) + s^m d = d + s^n deg(a_m)  <=>  d (s^m - 1) = deg(a_m) (s^n - 1)
    BigInt sm, sn;
    mpz_ui_pow_ui(sm.get_mpz_t(), s, m);
    mpz_ui_pow_ui(sn.get_mpz_t(), s, static_cast<unsigned long>(n));
    const BigInt num = deg_am * (sn - 1);
    const BigInt den = sm - 1;
    if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) return std::nullopt;
    const BigInt d = num / den;
    if (!d.fits_slong_p()) throw Error(ErrorKind::InvalidArgument, "leading-coefficient degree overflows");
    return static_cast<std::int64_t>(d.get_si());
}

std::size_t leading_space_dim(const OrePoly& a, std::size_t n, std::size_t coeff_bound) {
    return centralizer_slice(a, n, coeff_bound).count_by_degree()[n];
}

std::size_t ConditionDReport::minimal_ell() const {
    return dims.empty() ? 0 : *std::max_element(dims.begin(), dims.end());
}

ConditionDReport condition_D_from_slice(const CentralizerSlice& slice, std::size_t ell) {
    ConditionDReport report;
    report.ell = ell;
    report.max_degree = slice.max_degree;
    report.coeff_bound = slice.coeff_bound;
    report.dims = slice.count_by_degree();
    for (std::size_t n = 0; n < report.dims.size(); ++n)
        if (report.dims[n] > ell) report.violations.push_back(n);
    report.nonnegative_degrees =
        std::all_of(slice.basis.begin(), slice.basis.end(), [](const OrePoly& b) { return chi(b) >= Degree(0); });
    report.scalars_degree_zero = chi(OrePoly::constant(slice.a.algebra_ptr(), 1)) == Degree(0);
    return report;
}

ConditionDReport check_condition_D(const OrePoly& a, std::size_t ell, std::size_t max_degree, std::size_t coeff_bound) {
    return condition_D_from_slice(centralizer_slice(a, max_degree, coeff_bound), ell);
}

std::vector<std::size_t> ModuleBasis::residue_counts() const {
    std::vector<std::size_t> counts(static_cast<std::size_t>(m), 0);
    for (auto d : degrees) ++counts[static_cast<std::size_t>(d % m)];
    return counts;
}

ModuleBasis greedy_basis_from_slice(const CentralizerSlice& slice) {
    const OrePoly& a = slice.a;
    require_slice_input(a);
    if (chi(a) < Degree(1))
        throw Error(ErrorKind::Degenerate, "a = " + a.to_string() + " has chi(a) = 0; a K[a]-basis needs chi(a) > 0");
    const std::int64_t m = chi(a).value();
    if (slice.max_degree < static_cast<std::size_t>(m))
        throw Error(ErrorKind::BoundExhausted, "bound exhausted: max degree " + std::to_string(slice.max_degree) +
                                                   " is below chi(a) = " + std::to_string(m));

    ModuleBasis basis{a, m, {OrePoly::constant(a.algebra_ptr(), 1)}, {0}};
    for (const auto& candidate : slice.basis) {
        if (span_membership(candidate, basis).member) continue;
        basis.elements.push_back(candidate);
        basis.degrees.push_back(chi(candidate).value());
    }
    return basis;
}

ModuleBasis greedy_basis(const OrePoly& a, std::size_t max_degree, std::size_t coeff_bound) {
    require_slice_input(a);
    if (chi(a) < Degree(1))
        throw Error(ErrorKind::Degenerate, "a = " + a.to_string() + " has chi(a) = 0; a K[a]-basis needs chi(a) > 0");
    return greedy_basis_from_slice(centralizer_slice(a, max_degree, coeff_bound));
}

Membership span_membership(const OrePoly& c, const ModuleBasis& basis) {
    const OrePoly& a = basis.a;
    if (!commutator(a, c).is_zero())
        throw Error(ErrorKind::NotCommuting, "element " + c.to_string() + " does not commute with a = " + a.to_string());

    const std::size_t k = basis.elements.size();
    std::vector<std::vector<Scalar>> phi(k);
    std::vector<OrePoly> a_powers{OrePoly::constant(a.algebra_ptr(), 1)};
    std::map<std::pair<std::size_t, std::size_t>, OrePoly> products;  // (i, j) -> a^j b_i
    auto product = [&](std::size_t i, std::size_t j) -> const OrePoly& {
        auto it = products.find({i, j});
        if (it != products.end()) return it->second;
        while (a_powers.size() <= j) a_powers.push_back(ore_mul(a_powers.back(), a));
        return products.emplace(std::make_pair(i, j), ore_mul(a_powers[j], basis.elements[i])).first->second;
    };

    OrePoly rest = c;
    while (!rest.is_zero()) {
        const std::int64_t d = chi(rest).value();
        std::vector<std::pair<std::size_t, std::size_t>> terms;
        for (std::size_t i = 0; i < k; ++i) {
            const std::int64_t gap = d - basis.degrees[i];
            if (gap >= 0 && gap % basis.m == 0) terms.emplace_back(i, static_cast<std::size_t>(gap / basis.m));
        }

        std::optional<Vector> alpha;
        if (!terms.empty()) {
            const BasePoly& target = leading_coeff(rest);
            std::size_t rows = target.coeffs().size();
            for (auto [i, j] : terms) rows = std::max(rows, leading_coeff(product(i, j)).coeffs().size());
            Matrix lc(rows, terms.size());
            for (std::size_t t = 0; t < terms.size(); ++t) {
                const BasePoly& l = leading_coeff(product(terms[t].first, terms[t].second));
                for (std::size_t r = 0; r < l.coeffs().size(); ++r) lc(r, t) = l.coeffs()[r];
            }
            Vector rhs(rows);
            for (std::size_t r = 0; r < target.coeffs().size(); ++r) rhs[r] = target.coeffs()[r];
            alpha = solve(lc, rhs);
        }
        if (!alpha) return Membership{false, {}, rest};

        for (std::size_t t = 0; t < terms.size(); ++t) {
            const Scalar& coef = (*alpha)[t];
            if (sgn(coef) == 0) continue;
            const auto [i, j] = terms[t];
            rest -= product(i, j) * coef;
            if (phi[i].size() <= j) phi[i].resize(j + 1);
            phi[i][j] += coef;
        }
    }

    Membership result{true, {}, std::nullopt};
    for (auto& p : phi) result.phi.emplace_back(std::move(p));
    return result;
}

OrePoly evaluate_in(const BasePoly& phi, const OrePoly& a) {
    OrePoly acc(a.algebra_ptr());
    for (auto it = phi.coeffs().rbegin(); it != phi.coeffs().rend(); ++it)
        acc = ore_mul(acc, a) + OrePoly::constant(a.algebra_ptr(), *it);
    return acc;
}

OrePoly combine(const ModuleBasis& basis, const std::vector<BasePoly>& phi) {
    if (phi.size() != basis.elements.size())
        throw Error(ErrorKind::InvalidArgument, "coefficient count does not match the basis size");
    OrePoly sum(basis.a.algebra_ptr());
    for (std::size_t i = 0; i < phi.size(); ++i)
        if (!phi[i].is_zero()) sum += ore_mul(evaluate_in(phi[i], basis.a), basis.elements[i]);
    return sum;
}

bool check_rank_divides(const ModuleBasis& basis) {
    return basis.rank() > 0 && basis.m % static_cast<std::int64_t>(basis.rank()) == 0;
}

CommutativityReport check_commutative(const CentralizerSlice& slice) {
    CommutativityReport report;
    report.dimension = slice.basis.size();
    for (std::size_t i = 0; i < slice.basis.size(); ++i) {
        for (std::size_t j = i + 1; j < slice.basis.size(); ++j) {
            ++report.pairs_checked;
            if (!commutator(slice.basis[i], slice.basis[j]).is_zero()) report.non_commuting.emplace_back(i, j);
        }
    }
    return report;
}

CommutativityReport check_commutative(const OrePoly& a, std::size_t max_degree, std::size_t coeff_bound) {
    return check_commutative(centralizer_slice(a, max_degree, coeff_bound));
}

} // namespace oreext
