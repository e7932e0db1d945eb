#pragma once

#include "oreext/base_poly.hpp"
#include "oreext/degree.hpp"
#include "oreext/ore_poly.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace oreext {

/// K-basis of { b in C_S(a) : chi(b) <= max_degree, deg_y of every coefficient <= coeff_bound }.
///
/// The basis is in echelon form with respect to the leading monomial: each
/// element has a distinct leading monomial y^j x^i, its coefficient is 1, and
/// elements are sorted by (i, j). Any element of the slice therefore has the
/// leading monomial of one of the basis elements.
struct CentralizerSlice {
    OrePoly a;
    std::size_t max_degree = 0;
    std::size_t coeff_bound = 0;
    std::vector<OrePoly> basis;

    /// Number of basis elements with chi = n, for n = 0..max_degree.
    std::vector<std::size_t> count_by_degree() const;
};

/// Throws NotDomain if s = 0 and Degenerate if a is a scalar.
CentralizerSlice centralizer_slice(const OrePoly& a, std::size_t max_degree, std::size_t coeff_bound);

/// Initial coefficient bound: the largest leading-coefficient degree forced
/// for chi <= max_degree (when s >= 2), the y-degree of a, and 4.
std::size_t default_coeff_bound(const OrePoly& a, std::size_t max_degree);

struct AutoSliceResult {
    CentralizerSlice slice;
    bool stabilized = false;
    std::size_t doublings = 0;
};

/// Starts at default_coeff_bound and doubles the coefficient bound until two
/// consecutive bounds give the same per-degree slice dimensions, or until
/// max_doublings is reached.
AutoSliceResult centralizer_slice_auto(const OrePoly& a, std::size_t max_degree, std::size_t max_doublings = 3);

/// Solves deg(a_m) + s^m d = d + s^n deg(a_m) for d = deg_y of the leading
/// coefficient of a degree-n element of C_S(a). Returns nullopt if there is
/// no nonnegative integer solution, i.e. C_S(a) has no element of degree n.
/// Requires s >= 2 and chi(a) >= 1.
std::optional<std::int64_t> leading_coeff_degree_bound(const OrePoly& a, std::size_t n);

/// Dimension of the space of leading coefficients of slice elements with chi = n.
std::size_t leading_space_dim(const OrePoly& a, std::size_t n, std::size_t coeff_bound);

struct ConditionDReport {
    std::size_t ell = 0;
    std::size_t max_degree = 0;
    std::size_t coeff_bound = 0;
    std::vector<std::size_t> dims;        // leading-space dimension per degree
    std::vector<std::size_t> violations;  // degrees with dims[n] > ell
    bool nonnegative_degrees = true;      // chi(b) >= 0 for nonzero b
    bool scalars_degree_zero = true;      // nonzero scalars have chi = 0
    /// Smallest ell for which the checked degrees pass.
    std::size_t minimal_ell() const;
    bool passed() const { return violations.empty() && nonnegative_degrees && scalars_degree_zero; }
};

ConditionDReport check_condition_D(const OrePoly& a, std::size_t ell, std::size_t max_degree,
                                   std::size_t coeff_bound);
ConditionDReport condition_D_from_slice(const CentralizerSlice& slice, std::size_t ell);

/// Free K[a]-module basis b_1 = 1, b_2, ... built greedily: each new element
/// has minimal chi among slice elements outside the K[a]-span of the previous ones.
struct ModuleBasis {
    OrePoly a;
    std::int64_t m = 0;
    std::vector<OrePoly> elements;
    std::vector<std::int64_t> degrees;

    std::size_t rank() const { return elements.size(); }
    /// Count of basis degrees in each residue class mod m.
    std::vector<std::size_t> residue_counts() const;
};

/// Throws Degenerate if a is a scalar or chi(a) = 0, NotDomain if s = 0 and
/// BoundExhausted if max_degree < chi(a).
ModuleBasis greedy_basis(const OrePoly& a, std::size_t max_degree, std::size_t coeff_bound);
ModuleBasis greedy_basis_from_slice(const CentralizerSlice& slice);

struct Membership {
    bool member = false;
    /// phi_i as polynomials in a (variable printed as "a"); meaningful when member.
    std::vector<BasePoly> phi;
    /// What was left when the top degree could not be cancelled.
    std::optional<OrePoly> remainder;
};

/// Cancels the top degree of c with K-combinations of the leading
/// coefficients of a^j b_i until c vanishes (member) or the top degree
/// cannot be cancelled (not a member). Throws NotCommuting if [a, c] != 0.
Membership span_membership(const OrePoly& c, const ModuleBasis& basis);

/// sum_i phi_i(a) b_i.
OrePoly combine(const ModuleBasis& basis, const std::vector<BasePoly>& phi);
/// phi(a) for a polynomial phi in K[a].
OrePoly evaluate_in(const BasePoly& phi, const OrePoly& a);

bool check_rank_divides(const ModuleBasis& basis);

struct CommutativityReport {
    std::size_t dimension = 0;
    std::size_t pairs_checked = 0;
    std::vector<std::pair<std::size_t, std::size_t>> non_commuting;
    bool commutative() const { return non_commuting.empty(); }
};

CommutativityReport check_commutative(const OrePoly& a, std::size_t max_degree, std::size_t coeff_bound);
CommutativityReport check_commutative(const CentralizerSlice& slice);

} // namespace oreext
