#pragma once

#include "oreext/annihilator.hpp"
#include "oreext/axioms.hpp"
#include "oreext/centralizer.hpp"

#include <string>

namespace oreext {

enum class OutputFormat { Text, Machine };

struct SliceInfo {
    bool auto_bound = false;
    bool stabilized = true;
};

std::string render_slice(const CentralizerSlice& slice, const SliceInfo& info, OutputFormat format);
std::string render_condition_D(const CentralizerSlice& slice, const ConditionDReport& report,
                               const SliceInfo& info, OutputFormat format);
/// ell is the value the basis is checked against (rank <= ell*m, per-residue counts <= ell).
std::string render_basis(const ModuleBasis& basis, const ConditionDReport& condition, std::size_t ell,
                         const SliceInfo& info, OutputFormat format);
std::string render_commutative(const CentralizerSlice& slice, const CommutativityReport& report,
                               const SliceInfo& info, OutputFormat format);
std::string render_annihilator(const OrePoly& p, const OrePoly& q, const AnnihilatorResult& result,
                               OutputFormat format);
std::string render_axioms(const PseudoDegreeReport& report, OutputFormat format);

} // namespace oreext
