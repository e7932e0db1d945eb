#pragma once

#include "oreext/algebra.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace oreext {

struct AxiomCheck {
    std::string name;
    std::size_t checks = 0;
    std::size_t failures = 0;
    std::optional<std::string> counterexample;
};

/// Outcome of a randomized check of the pseudo-degree axioms for chi = x-degree.
struct PseudoDegreeReport {
    std::string algebra;
    std::size_t s = 0;
    std::size_t trials = 0;
    std::size_t max_degree = 0;
    std::uint64_t seed = 0;
    std::vector<AxiomCheck> checks;  // zero, multiplicative, subadditive, strict-sum
    bool multiplicativity_certified = false;
    std::string note;

    bool all_passed() const;
};

/// Checks chi(a) = -inf iff a = 0, chi(ab) = chi(a) + chi(b),
/// chi(a+b) <= max(chi(a), chi(b)) and chi(a+b) = chi(a) when chi(b) < chi(a)
/// on random pairs. For s = 0 a targeted pair (x, y - sigma(y)) is added,
/// since then sigma kills y - sigma(y) and the product drops degree.
PseudoDegreeReport validate_pseudo_degree(const AlgebraPtr& algebra, std::size_t trials,
                                          std::size_t max_deg, std::uint64_t seed = 1);

} // namespace oreext
