#include "oreext/report.hpp"

#include <json.hpp>

#include <sstream>

namespace oreext {

namespace {

using nlohmann::json;

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string bound_text(const CentralizerSlice& slice, const SliceInfo& info) {
    std::string out = std::to_string(slice.coeff_bound);
    if (info.auto_bound) out += info.stabilized ? " (auto, stabilized)" : " (auto, NOT stabilized)";
    return out;
}

json slice_header(const std::string& command, const CentralizerSlice& slice, const SliceInfo& info) {
    return json{{"command", command},
                {"a", slice.a.to_string()},
                {"algebra", slice.a.algebra().describe()},
                {"max_degree", slice.max_degree},
                {"coeff_bound", slice.coeff_bound},
                {"coeff_bound_auto", info.auto_bound},
                {"stabilized", info.stabilized}};
}

json condition_json(const ConditionDReport& report) {
    return json{{"ell", report.ell},
                {"dims", report.dims},
                {"violations", report.violations},
                {"nonnegative_degrees", report.nonnegative_degrees},
                {"scalars_degree_zero", report.scalars_degree_zero},
                {"minimal_ell", report.minimal_ell()},
                {"passed", report.passed()}};
}

std::string condition_verdict(const ConditionDReport& report) {
    if (report.passed()) return "PASS";
    std::string out = "FAIL";
    if (!report.violations.empty()) {
        out += " at degree";
        out += report.violations.size() > 1 ? "s " : " ";
        for (std::size_t i = 0; i < report.violations.size(); ++i)
            out += (i ? ", " : "") + std::to_string(report.violations[i]);
    }
    return out;
}

} // namespace

std::string render_slice(const CentralizerSlice& slice, const SliceInfo& info, OutputFormat format) {
    if (format == OutputFormat::Machine) {
        json j = slice_header("centralizer", slice, info);
        json basis = json::array();
        for (const auto& b : slice.basis) basis.push_back({{"chi", chi(b).value()}, {"element", b.to_string()}});
        j["dimension"] = slice.basis.size();
        j["basis"] = std::move(basis);
        return j.dump() + "\n";
    }
    std::ostringstream out;
    out << "centralizer slice of a = " << slice.a.to_string() << "\n"
        << "algebra: " << slice.a.algebra().describe() << "\n"
        << "max degree: " << slice.max_degree << "\n"
        << "coefficient bound: " << bound_text(slice, info) << "\n"
        << "dimension: " << slice.basis.size() << "\n";
    for (const auto& b : slice.basis) out << "  [chi=" << chi(b).value() << "] " << b.to_string() << "\n";
    return out.str();
}

std::string render_condition_D(const CentralizerSlice& slice, const ConditionDReport& report, const SliceInfo& info,
                               OutputFormat format) {
    if (format == OutputFormat::Machine) {
        json j = slice_header("check-d", slice, info);
        j["condition"] = condition_json(report);
        return j.dump() + "\n";
    }
    std::ostringstream out;
    out << "condition D(" << report.ell << ") for a = " << slice.a.to_string() << "\n"
        << "algebra: " << slice.a.algebra().describe() << "\n"
        << "coefficient bound: " << bound_text(slice, info) << "\n"
        << "degree  leading-space dimension\n";
    for (std::size_t n = 0; n < report.dims.size(); ++n)
        out << "  " << n << "     " << report.dims[n] << (report.dims[n] > report.ell ? "  > ell" : "") << "\n";
    out << "chi(b) >= 0 for nonzero b: " << yes_no(report.nonnegative_degrees) << "\n"
        << "nonzero scalars have chi = 0: " << yes_no(report.scalars_degree_zero) << "\n"
        << "result: " << condition_verdict(report) << "\n";
    return out.str();
}

std::string render_basis(const ModuleBasis& basis, const ConditionDReport& condition, std::size_t ell,
                         const SliceInfo& info, OutputFormat format) {
    const auto residues = basis.residue_counts();
    std::size_t max_residue = 0;
    for (auto c : residues) max_residue = std::max(max_residue, c);
    const bool rank_ok = basis.rank() <= ell * static_cast<std::size_t>(basis.m);
    const bool residue_ok = max_residue <= ell;
    const bool divides = check_rank_divides(basis);

    if (format == OutputFormat::Machine) {
        json elements = json::array();
        for (std::size_t i = 0; i < basis.rank(); ++i)
            elements.push_back({{"chi", basis.degrees[i]}, {"element", basis.elements[i].to_string()}});
        json j{{"command", "basis"},
               {"a", basis.a.to_string()},
               {"algebra", basis.a.algebra().describe()},
               {"m", basis.m},
               {"max_degree", condition.max_degree},
               {"coeff_bound", condition.coeff_bound},
               {"coeff_bound_auto", info.auto_bound},
               {"stabilized", info.stabilized},
               {"ell", ell},
               {"condition", condition_json(condition)},
               {"rank", basis.rank()},
               {"elements", std::move(elements)},
               {"residue_counts", residues},
               {"rank_within_bound", rank_ok},
               {"residues_within_bound", residue_ok},
               {"rank_divides_m", divides}};
        return j.dump() + "\n";
    }
    std::ostringstream out;
    out << "K[a]-module basis for a = " << basis.a.to_string() << " (m = " << basis.m << ")\n"
        << "algebra: " << basis.a.algebra().describe() << "\n"
        << "max degree: " << condition.max_degree << ", coefficient bound: " << condition.coeff_bound
        << (info.auto_bound ? (info.stabilized ? " (auto, stabilized)" : " (auto, NOT stabilized)") : "") << "\n";
    for (std::size_t i = 0; i < basis.rank(); ++i)
        out << "  b" << i + 1 << " = " << basis.elements[i].to_string() << "  [chi=" << basis.degrees[i] << "]\n";
    out << "rank: " << basis.rank() << "\n"
        << "condition D(" << ell << ") up to degree " << condition.max_degree << ": "
        << (condition.passed() ? "PASS" : "FAIL") << "\n"
        << "rank <= ell*m: " << basis.rank() << " <= " << ell * static_cast<std::size_t>(basis.m) << " "
        << yes_no(rank_ok) << "\n"
        << "per-residue counts mod " << basis.m << ":";
    for (std::size_t r = 0; r < residues.size(); ++r) out << " [" << r << "]=" << residues[r];
    out << " (<= ell: " << yes_no(residue_ok) << ")\n"
        << "rank divides m: " << yes_no(divides) << (ell == 1 ? "" : " (guaranteed only under D(1))") << "\n";
    return out.str();
}

std::string render_commutative(const CentralizerSlice& slice, const CommutativityReport& report,
                               const SliceInfo& info, OutputFormat format) {
    if (format == OutputFormat::Machine) {
        json j = slice_header("check-commutative", slice, info);
        json pairs = json::array();
        for (auto [i, k] : report.non_commuting)
            pairs.push_back({slice.basis[i].to_string(), slice.basis[k].to_string()});
        j["dimension"] = report.dimension;
        j["pairs_checked"] = report.pairs_checked;
        j["non_commuting"] = std::move(pairs);
        j["commutative"] = report.commutative();
        return j.dump() + "\n";
    }
    std::ostringstream out;
    out << "commutativity of the centralizer slice of a = " << slice.a.to_string() << "\n"
        << "algebra: " << slice.a.algebra().describe() << "\n"
        << "max degree: " << slice.max_degree << ", coefficient bound: " << bound_text(slice, info) << "\n"
        << "dimension: " << report.dimension << ", pairs checked: " << report.pairs_checked << "\n";
    for (auto [i, k] : report.non_commuting)
        out << "  non-commuting: " << slice.basis[i].to_string() << "  and  " << slice.basis[k].to_string() << "\n";
    out << "result: " << (report.commutative() ? "commutative" : "NOT commutative") << "\n";
    return out.str();
}

std::string render_annihilator(const OrePoly& p, const OrePoly& q, const AnnihilatorResult& result,
                               OutputFormat format) {
    if (format == OutputFormat::Machine) {
        json integer = json::array();
        for (const auto& c : result.f.integer_coefficients()) integer.push_back(c.get_str());
        json j{{"command", "annihilate"},
               {"P", p.to_string()},
               {"Q", q.to_string()},
               {"algebra", p.algebra().describe()},
               {"f", result.f.to_string()},
               {"s_bound", result.s_bound},
               {"t_bound", result.t_bound},
               {"doublings", result.doublings},
               {"integer_grid", std::move(integer)}};
        return j.dump() + "\n";
    }
    return result.f.to_string() + "\n";
}

std::string render_axioms(const PseudoDegreeReport& report, OutputFormat format) {
    if (format == OutputFormat::Machine) {
        json checks = json::array();
        for (const auto& c : report.checks) {
            json item{{"name", c.name}, {"checks", c.checks}, {"failures", c.failures}};
            item["counterexample"] = c.counterexample ? json(*c.counterexample) : json(nullptr);
            checks.push_back(std::move(item));
        }
        json j{{"command", "validate-axioms"},
               {"algebra", report.algebra},
               {"s", report.s},
               {"trials", report.trials},
               {"max_degree", report.max_degree},
               {"seed", report.seed},
               {"checks", std::move(checks)},
               {"multiplicativity_certified", report.multiplicativity_certified},
               {"note", report.note},
               {"passed", report.all_passed()}};
        return j.dump() + "\n";
    }
    std::ostringstream out;
    out << "pseudo-degree axioms for chi = x-degree\n"
        << "algebra: " << report.algebra << "\n"
        << "s = " << report.s << ", trials = " << report.trials << ", max degree = " << report.max_degree
        << ", seed = " << report.seed << "\n";
    for (const auto& c : report.checks) {
        out << "  " << c.name << ": " << c.checks << " checks, " << c.failures << " failures\n";
        if (c.counterexample) out << "    counterexample: " << *c.counterexample << "\n";
    }
    out << "note: " << report.note << "\n"
        << "result: " << (report.all_passed() ? "PASS" : "FAIL") << "\n";
    return out.str();
}

} // namespace oreext
