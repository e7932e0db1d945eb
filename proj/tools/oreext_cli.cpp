// Command-line front end. Everything goes through the C interface in oreext.h.

#include "oreext/oreext.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <memory>
#include <string>

namespace {

struct AlgebraDeleter {
    void operator()(ore_algebra* a) const { ore_algebra_free(a); }
};
struct OperatorDeleter {
    void operator()(ore_operator* p) const { ore_operator_free(p); }
};
struct StringDeleter {
    void operator()(char* s) const { ore_string_free(s); }
};
using AlgebraHandle = std::unique_ptr<ore_algebra, AlgebraDeleter>;
using OperatorHandle = std::unique_ptr<ore_operator, OperatorDeleter>;
using StringHandle = std::unique_ptr<char, StringDeleter>;

/// Thrown after a failed library call; carries the process exit code.
struct Failure {
    int exit_code;
};

int exit_code_for(ore_status status) {
    switch (status) {
    case ORE_OK: return 0;
    case ORE_ERR_INVALID_ARGUMENT:
    case ORE_ERR_PARSE:
    case ORE_ERR_IO: return 2;
    default: return 1;
    }
}

void check(ore_status status, const std::string& context = {}) {
    if (status == ORE_OK) return;
    std::cerr << "error: " << ore_status_name(status) << ": ";
    if (!context.empty()) std::cerr << context << ": ";
    std::cerr << ore_last_error() << "\n";
    throw Failure{exit_code_for(status)};
}

struct Options {
    std::string algebra_path;
    std::string p_expr;
    std::string q_expr;
    std::string a_expr;
    std::size_t max_degree = 6;
    long coeff_bound = ORE_AUTO_BOUND;
    std::size_t ell = 1;
    std::size_t max_doublings = 3;
    std::size_t s_degree = 0;
    std::size_t t_degree = 0;
    std::size_t trials = 500;
    std::uint64_t seed = 1;
    bool machine = false;
};

AlgebraHandle load_algebra(const Options& opt) {
    ore_algebra* a = nullptr;
    check(ore_algebra_load(opt.algebra_path.c_str(), &a), "--algebra");
    return AlgebraHandle(a);
}

OperatorHandle parse(const ore_algebra* algebra, const std::string& expr, const char* flag) {
    ore_operator* op = nullptr;
    check(ore_operator_parse(algebra, expr.c_str(), &op), flag);
    return OperatorHandle(op);
}

std::string text_of(const ore_operator* op) {
    char* s = nullptr;
    check(ore_operator_to_string(op, &s));
    return StringHandle(s).get();
}

void emit(char* s) {
    StringHandle owned(s);
    std::fputs(owned.get(), stdout);
}

ore_format format_of(const Options& opt) { return opt.machine ? ORE_FORMAT_MACHINE : ORE_FORMAT_TEXT; }

void print_binary(const std::string& command, const Options& opt, ore_status (*fn)(const ore_operator*, const ore_operator*, ore_operator**)) {
    auto algebra = load_algebra(opt);
    auto p = parse(algebra.get(), opt.p_expr, "-P");
    auto q = parse(algebra.get(), opt.q_expr, "-Q");
    ore_operator* r = nullptr;
    check(fn(p.get(), q.get(), &r));
    OperatorHandle result(r);
    if (opt.machine) {
        nlohmann::json j{{"command", command}, {"P", text_of(p.get())}, {"Q", text_of(q.get())}, {"result", text_of(result.get())}};
        std::cout << j.dump() << "\n";
    } else {
        std::cout << text_of(result.get()) << "\n";
    }
}

void run_chi(const Options& opt) {
    auto algebra = load_algebra(opt);
    auto p = parse(algebra.get(), opt.p_expr, "-P");
    std::int64_t degree = 0;
    int bottom = 0;
    check(ore_chi(p.get(), &degree, &bottom));
    const std::string text = bottom ? "-inf" : std::to_string(degree);
    if (opt.machine) {
        nlohmann::json j{{"command", "chi"}, {"P", text_of(p.get())}, {"chi", text}};
        std::cout << j.dump() << "\n";
    } else {
        std::cout << text << "\n";
    }
}

void run_centralizer(const Options& opt) {
    auto algebra = load_algebra(opt);
    auto a = parse(algebra.get(), opt.a_expr, "-a");
    char* out = nullptr;
    check(ore_centralizer_report(a.get(), opt.max_degree, opt.coeff_bound, opt.max_doublings, format_of(opt), &out));
    emit(out);
}

void run_basis(const Options& opt) {
    auto algebra = load_algebra(opt);
    auto a = parse(algebra.get(), opt.a_expr, "-a");
    char* out = nullptr;
    check(ore_basis_report(a.get(), opt.ell, opt.max_degree, opt.coeff_bound, opt.max_doublings, format_of(opt), &out));
    emit(out);
}

void run_check_d(const Options& opt) {
    auto algebra = load_algebra(opt);
    auto a = parse(algebra.get(), opt.a_expr, "-a");
    char* out = nullptr;
    check(ore_check_d_report(a.get(), opt.ell, opt.max_degree, opt.coeff_bound, opt.max_doublings, format_of(opt),
                             &out, nullptr));
    emit(out);
}

void run_check_commutative(const Options& opt) {
    auto algebra = load_algebra(opt);
    auto a = parse(algebra.get(), opt.a_expr, "-a");
    char* out = nullptr;
    check(ore_check_commutative_report(a.get(), opt.max_degree, opt.coeff_bound, opt.max_doublings, format_of(opt),
                                       &out, nullptr));
    emit(out);
}

void run_annihilate(const Options& opt) {
    auto algebra = load_algebra(opt);
    auto p = parse(algebra.get(), opt.p_expr, "-P");
    auto q = parse(algebra.get(), opt.q_expr, "-Q");
    char* out = nullptr;
    check(ore_annihilate_report(p.get(), q.get(), opt.s_degree, opt.t_degree, opt.max_doublings, format_of(opt), &out));
    emit(out);
}

void run_validate(const Options& opt) {
    auto algebra = load_algebra(opt);
    char* out = nullptr;
    check(ore_validate_axioms_report(algebra.get(), opt.trials, opt.max_degree, opt.seed, format_of(opt), &out,
                                     nullptr));
    emit(out);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Centralizers and annihilating polynomials in Ore extensions Q[y][x; sigma, delta]"};
    app.require_subcommand(1);
    Options opt;

    auto add_algebra = [&](CLI::App* cmd) {
        cmd->add_option("--algebra", opt.algebra_path, "Algebra config file (key=value: sigma_y, delta_y)")->required();
        cmd->add_flag("--machine", opt.machine, "Print a single-line JSON record");
    };
    auto add_slice_options = [&](CLI::App* cmd) {
        cmd->add_option("-a", opt.a_expr, "Operator whose centralizer is computed")->required();
        cmd->add_option("--max-degree", opt.max_degree, "Largest x-degree of the slice")->capture_default_str();
        cmd->add_option("--coeff-bound", opt.coeff_bound, "Largest y-degree of coefficients (default: automatic)")
            ->check(CLI::NonNegativeNumber);
        cmd->add_option("--max-doublings", opt.max_doublings, "Doublings of the automatic coefficient bound")
            ->capture_default_str();
    };

    auto* mul = app.add_subcommand("mul", "Product P*Q in normal form");
    add_algebra(mul);
    mul->add_option("-P", opt.p_expr, "Left factor")->required();
    mul->add_option("-Q", opt.q_expr, "Right factor")->required();

    auto* comm = app.add_subcommand("commutator", "Commutator PQ - QP");
    add_algebra(comm);
    comm->add_option("-P", opt.p_expr, "First operator")->required();
    comm->add_option("-Q", opt.q_expr, "Second operator")->required();

    auto* chi = app.add_subcommand("chi", "Degree in x (-inf for zero)");
    add_algebra(chi);
    chi->add_option("-P", opt.p_expr, "Operator")->required();

    auto* cen = app.add_subcommand("centralizer", "K-basis of a degree slice of the centralizer of a");
    add_algebra(cen);
    add_slice_options(cen);

    auto* basis = app.add_subcommand("basis", "Greedy free K[a]-module basis of the centralizer of a");
    add_algebra(basis);
    add_slice_options(basis);
    basis->add_option("--ell", opt.ell, "Check against condition D(ell) (0: smallest ell that holds)");

    auto* checkd = app.add_subcommand("check-d", "Verify condition D(ell) up to the degree bound");
    add_algebra(checkd);
    add_slice_options(checkd);
    checkd->add_option("--ell", opt.ell, "ell in D(ell)")->capture_default_str();

    auto* checkc = app.add_subcommand("check-commutative", "Check that the centralizer slice is commutative");
    add_algebra(checkc);
    add_slice_options(checkc);

    auto* ann = app.add_subcommand("annihilate", "Nonzero f(s,t) with f(P,Q) = 0 for commuting P, Q");
    add_algebra(ann);
    ann->add_option("-P", opt.p_expr, "First operator (s)")->required();
    ann->add_option("-Q", opt.q_expr, "Second operator (t)")->required();
    ann->add_option("--max-doublings", opt.max_doublings, "Doublings of the degree bounds before giving up");
    ann->add_option("--s-degree", opt.s_degree, "Fixed bound on the s-degree (with --t-degree)");
    ann->add_option("--t-degree", opt.t_degree, "Fixed bound on the t-degree (with --s-degree)");

    auto* val = app.add_subcommand("validate-axioms", "Randomized check of the pseudo-degree axioms");
    add_algebra(val);
    val->add_option("--trials", opt.trials, "Number of random pairs")->capture_default_str();
    val->add_option("--max-degree", opt.max_degree, "Largest x- and y-degree of random elements");
    val->add_option("--seed", opt.seed, "Random seed")->capture_default_str();

    // Per-command defaults that differ from the shared ones.
    if (argc > 1) {
        const std::string cmd = argv[1];
        if (cmd == "annihilate") opt.max_doublings = 5;
        if (cmd == "validate-axioms") opt.max_degree = 4;
        if (cmd == "basis") opt.ell = 0;
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (mul->parsed()) print_binary("mul", opt, ore_mul);
        else if (comm->parsed()) print_binary("commutator", opt, ore_commutator);
        else if (chi->parsed()) run_chi(opt);
        else if (cen->parsed()) run_centralizer(opt);
        else if (basis->parsed()) run_basis(opt);
        else if (checkd->parsed()) run_check_d(opt);
        else if (checkc->parsed()) run_check_commutative(opt);
        else if (ann->parsed()) run_annihilate(opt);
        else if (val->parsed()) run_validate(opt);
    } catch (const Failure& f) {
        return f.exit_code;
    }
    return 0;
}
