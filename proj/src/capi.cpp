#include "oreext/oreext.h"

#include "oreext/annihilator.hpp"
#include "oreext/axioms.hpp"
#include "oreext/centralizer.hpp"
#include "oreext/config.hpp"
#include "oreext/errors.hpp"
#include "oreext/parser.hpp"
#include "oreext/report.hpp"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

using namespace oreext;

struct ore_algebra {
    AlgebraPtr value;
};

struct ore_operator {
    OrePoly value;
};

namespace {

thread_local std::string last_error;

ore_status status_of(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::InvalidArgument: return ORE_ERR_INVALID_ARGUMENT;
    case ErrorKind::Parse: return ORE_ERR_PARSE;
    case ErrorKind::Io: return ORE_ERR_IO;
    case ErrorKind::AlgebraMismatch: return ORE_ERR_ALGEBRA_MISMATCH;
    case ErrorKind::NotDomain: return ORE_ERR_NOT_DOMAIN;
    case ErrorKind::Degenerate: return ORE_ERR_DEGENERATE;
    case ErrorKind::NotCommuting: return ORE_ERR_NOT_COMMUTING;
    case ErrorKind::BoundExhausted: return ORE_ERR_BOUND_EXHAUSTED;
    case ErrorKind::BudgetExhausted: return ORE_ERR_BUDGET_EXHAUSTED;
    }
    return ORE_ERR_INTERNAL;
}

template <class F>
ore_status guarded(F&& body) {
    try {
        last_error.clear();
        body();
        return ORE_OK;
    } catch (const Error& e) {
        last_error = e.what();
        return status_of(e.kind());
    } catch (const std::bad_alloc&) {
        last_error = "out of memory";
        return ORE_ERR_INTERNAL;
    } catch (const std::exception& e) {
        last_error = e.what();
        return ORE_ERR_INTERNAL;
    }
}

void require(const void* p, const char* name) {
    if (!p) throw Error(ErrorKind::InvalidArgument, std::string(name) + " must not be null");
}

char* copy_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

OutputFormat format_of(ore_format f) { return f == ORE_FORMAT_MACHINE ? OutputFormat::Machine : OutputFormat::Text; }

struct ResolvedSlice {
    CentralizerSlice slice;
    SliceInfo info;
};

ResolvedSlice resolve_slice(const OrePoly& a, std::size_t max_degree, long coeff_bound, std::size_t max_doublings) {
    if (coeff_bound == ORE_AUTO_BOUND) {
        AutoSliceResult r = centralizer_slice_auto(a, max_degree, max_doublings);
        return {std::move(r.slice), SliceInfo{true, r.stabilized}};
    }
    if (coeff_bound < 0) throw Error(ErrorKind::InvalidArgument, "coefficient bound must be nonnegative");
    return {centralizer_slice(a, max_degree, static_cast<std::size_t>(coeff_bound)), SliceInfo{false, true}};
}

} // namespace

extern "C" {

const char* ore_last_error(void) { return last_error.c_str(); }

const char* ore_status_name(ore_status status) {
    switch (status) {
    case ORE_OK: return "ok";
    case ORE_ERR_INVALID_ARGUMENT: return "invalid argument";
    case ORE_ERR_PARSE: return "parse error";
    case ORE_ERR_IO: return "i/o error";
    case ORE_ERR_ALGEBRA_MISMATCH: return "algebra mismatch";
    case ORE_ERR_NOT_DOMAIN: return "not a domain";
    case ORE_ERR_DEGENERATE: return "degenerate input";
    case ORE_ERR_NOT_COMMUTING: return "operators do not commute";
    case ORE_ERR_BOUND_EXHAUSTED: return "bound exhausted";
    case ORE_ERR_BUDGET_EXHAUSTED: return "budget exhausted";
    case ORE_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

void ore_string_free(char* s) { std::free(s); }

ore_status ore_algebra_create(const char* sigma_y, const char* delta_y, ore_algebra** out) {
    return guarded([&] {
        require(sigma_y, "sigma_y");
        require(delta_y, "delta_y");
        require(out, "out");
        AlgebraConfig config;
        config.sigma_y = sigma_y;
        config.delta_y = delta_y;
        *out = new ore_algebra{config.build()};
    });
}

ore_status ore_algebra_from_config(const char* config_text, ore_algebra** out) {
    return guarded([&] {
        require(config_text, "config_text");
        require(out, "out");
        *out = new ore_algebra{parse_algebra_config(config_text).build()};
    });
}

ore_status ore_algebra_load(const char* path, ore_algebra** out) {
    return guarded([&] {
        require(path, "path");
        require(out, "out");
        *out = new ore_algebra{load_algebra_config(path).build()};
    });
}

void ore_algebra_free(ore_algebra* algebra) { delete algebra; }

size_t ore_algebra_sigma_degree(const ore_algebra* algebra) { return algebra ? algebra->value->s() : 0; }

ore_status ore_algebra_describe(const ore_algebra* algebra, char** out) {
    return guarded([&] {
        require(algebra, "algebra");
        require(out, "out");
        *out = copy_string(algebra->value->describe());
    });
}

ore_status ore_operator_parse(const ore_algebra* algebra, const char* expr, ore_operator** out) {
    return guarded([&] {
        require(algebra, "algebra");
        require(expr, "expr");
        require(out, "out");
        *out = new ore_operator{parse_operator(expr, algebra->value)};
    });
}

void ore_operator_free(ore_operator* op) { delete op; }

ore_status ore_operator_to_string(const ore_operator* op, char** out) {
    return guarded([&] {
        require(op, "op");
        require(out, "out");
        *out = copy_string(op->value.to_string());
    });
}

ore_status ore_mul(const ore_operator* p, const ore_operator* q, ore_operator** out) {
    return guarded([&] {
        require(p, "p");
        require(q, "q");
        require(out, "out");
        *out = new ore_operator{oreext::ore_mul(p->value, q->value)};
    });
}

ore_status ore_commutator(const ore_operator* p, const ore_operator* q, ore_operator** out) {
    return guarded([&] {
        require(p, "p");
        require(q, "q");
        require(out, "out");
        *out = new ore_operator{oreext::commutator(p->value, q->value)};
    });
}

ore_status ore_chi(const ore_operator* p, int64_t* degree, int* is_bottom) {
    return guarded([&] {
        require(p, "p");
        require(degree, "degree");
        require(is_bottom, "is_bottom");
        const Degree d = chi(p->value);
        *is_bottom = d.is_bottom() ? 1 : 0;
        *degree = d.is_bottom() ? 0 : d.value();
    });
}

ore_status ore_leading_coeff(const ore_operator* p, char** out) {
    return guarded([&] {
        require(p, "p");
        require(out, "out");
        *out = copy_string(leading_coeff(p->value).to_string());
    });
}

ore_status ore_is_zero(const ore_operator* p, int* out) {
    return guarded([&] {
        require(p, "p");
        require(out, "out");
        *out = p->value.is_zero() ? 1 : 0;
    });
}

ore_status ore_centralizer_report(const ore_operator* a, size_t max_degree, long coeff_bound, size_t max_doublings,
                                  ore_format format, char** out) {
    return guarded([&] {
        require(a, "a");
        require(out, "out");
        const ResolvedSlice r = resolve_slice(a->value, max_degree, coeff_bound, max_doublings);
        *out = copy_string(render_slice(r.slice, r.info, format_of(format)));
    });
}

ore_status ore_leading_space_dim(const ore_operator* a, size_t degree, size_t coeff_bound, size_t* out) {
    return guarded([&] {
        require(a, "a");
        require(out, "out");
        *out = leading_space_dim(a->value, degree, coeff_bound);
    });
}

ore_status ore_leading_coeff_degree_bound(const ore_operator* a, size_t degree, int64_t* out, int* exists) {
    return guarded([&] {
        require(a, "a");
        require(out, "out");
        require(exists, "exists");
        const auto d = leading_coeff_degree_bound(a->value, degree);
        *exists = d ? 1 : 0;
        *out = d.value_or(0);
    });
}

ore_status ore_check_d_report(const ore_operator* a, size_t ell, size_t max_degree, long coeff_bound,
                              size_t max_doublings, ore_format format, char** out, int* passed) {
    return guarded([&] {
        require(a, "a");
        require(out, "out");
        const ResolvedSlice r = resolve_slice(a->value, max_degree, coeff_bound, max_doublings);
        const ConditionDReport report = condition_D_from_slice(r.slice, ell);
        *out = copy_string(render_condition_D(r.slice, report, r.info, format_of(format)));
        if (passed) *passed = report.passed() ? 1 : 0;
    });
}

ore_status ore_basis_report(const ore_operator* a, size_t ell, size_t max_degree, long coeff_bound,
                            size_t max_doublings, ore_format format, char** out) {
    return guarded([&] {
        require(a, "a");
        require(out, "out");
        if (!a->value.algebra().is_domain())
            throw Error(ErrorKind::NotDomain,
                        "algebra has s = 0 (sigma(y) is constant): sigma is not injective, S has zero divisors");
        if (a->value.is_scalar())
            throw Error(ErrorKind::Degenerate, "a = " + a->value.to_string() + " is a scalar; greedy basis needs chi(a) > 0");
        if (chi(a->value) < Degree(1))
            throw Error(ErrorKind::Degenerate,
                        "a = " + a->value.to_string() + " has chi(a) = 0; greedy basis needs chi(a) > 0");
        const ResolvedSlice r = resolve_slice(a->value, max_degree, coeff_bound, max_doublings);
        const std::size_t used_ell = ell == 0 ? std::max<std::size_t>(1, condition_D_from_slice(r.slice, 1).minimal_ell()) : ell;
        const ConditionDReport condition = condition_D_from_slice(r.slice, used_ell);
        const ModuleBasis basis = greedy_basis_from_slice(r.slice);
        *out = copy_string(render_basis(basis, condition, used_ell, r.info, format_of(format)));
    });
}

ore_status ore_check_commutative_report(const ore_operator* a, size_t max_degree, long coeff_bound,
                                        size_t max_doublings, ore_format format, char** out, int* commutative) {
    return guarded([&] {
        require(a, "a");
        require(out, "out");
        const ResolvedSlice r = resolve_slice(a->value, max_degree, coeff_bound, max_doublings);
        const CommutativityReport report = check_commutative(r.slice);
        *out = copy_string(render_commutative(r.slice, report, r.info, format_of(format)));
        if (commutative) *commutative = report.commutative() ? 1 : 0;
    });
}

ore_status ore_annihilate_report(const ore_operator* p, const ore_operator* q, size_t s_bound, size_t t_bound,
                                 size_t max_doublings, ore_format format, char** out) {
    return guarded([&] {
        require(p, "p");
        require(q, "q");
        require(out, "out");
        AnnihilatorResult result{BivariatePoly(0, 0)};
        if (s_bound == 0 && t_bound == 0) {
            result = annihilating_polynomial_auto(p->value, q->value, max_doublings);
        } else {
            auto f = annihilating_polynomial(p->value, q->value, s_bound, t_bound);
            if (!f)
                throw Error(ErrorKind::BudgetExhausted, "none at this bound: no annihilating polynomial with s-degree <= " +
                                                            std::to_string(s_bound) + " and t-degree <= " +
                                                            std::to_string(t_bound));
            result = AnnihilatorResult{std::move(*f), s_bound, t_bound, 0};
        }
        *out = copy_string(render_annihilator(p->value, q->value, result, format_of(format)));
    });
}

ore_status ore_validate_axioms_report(const ore_algebra* algebra, size_t trials, size_t max_degree, uint64_t seed,
                                      ore_format format, char** out, int* passed) {
    return guarded([&] {
        require(algebra, "algebra");
        require(out, "out");
        const PseudoDegreeReport report = validate_pseudo_degree(algebra->value, trials, max_degree, seed);
        *out = copy_string(render_axioms(report, format_of(format)));
        if (passed) *passed = report.all_passed() ? 1 : 0;
    });
}

} // extern "C"
