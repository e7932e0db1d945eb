#include "oreext/annihilator.hpp"
#include "oreext/centralizer.hpp"
#include "oreext/errors.hpp"
#include "oreext/random.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

using namespace oreext;
using testing_support::op;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "expected an oreext::Error";
    return ErrorKind::InvalidArgument;
}

/// f(p, q) recomputed term by term with the oracle multiplication.
oracle::Op oracle_evaluate(const BivariatePoly& f, const OrePoly& p, const OrePoly& q) {
    const auto alg = testing_support::to_oracle(p.algebra());
    const auto P = testing_support::to_oracle(p);
    const auto Q = testing_support::to_oracle(q);
    oracle::Op total;
    for (std::size_t i = 0; i <= f.s_bound(); ++i)
        for (std::size_t j = 0; j <= f.t_bound(); ++j) {
            if (sgn(f.coeff(i, j)) == 0) continue;
            oracle::Op term{{{0, 0}, 1}};
            for (std::size_t k = 0; k < i; ++k) term = alg.mul(term, P);
            for (std::size_t k = 0; k < j; ++k) term = alg.mul(term, Q);
            total = oracle::op_add(total, term, f.coeff(i, j));
        }
    return total;
}

} // namespace

TEST(BivariatePoly, PrintingAndNormalization) {
    BivariatePoly f(3, 2);
    EXPECT_TRUE(f.is_zero());
    EXPECT_EQ(f.to_string(), "0");
    f.coeff(0, 2) = -2;
    f.coeff(3, 0) = 2;
    f.normalize();
    EXPECT_EQ(f.to_string(), "t^2 - s^3");
    f.coeff(1, 1) = Scalar(1, 2);
    EXPECT_EQ(f.to_string(), "t^2 + 1/2*s*t - s^3");
    std::vector<BigInt> expected(12);
    expected[2] = 2;   // t^2
    expected[4] = 1;   // s*t
    expected[9] = -2;  // s^3
    EXPECT_EQ(f.integer_coefficients(), expected);
}

TEST(Evaluate, Examples) {
    const auto A = OreAlgebra::weyl();
    BivariatePoly f(1, 1);
    f.coeff(1, 0) = 1;
    f.coeff(0, 1) = -1;
    EXPECT_TRUE(evaluate(f, op("x", A), op("x", A)).is_zero());
    EXPECT_EQ(evaluate(f, op("x^2", A), op("x", A)), op("x^2 - x", A));
    EXPECT_EQ(kind_of([&] { (void)evaluate(f, op("x", A), op("y", A)); }), ErrorKind::NotCommuting);
}

TEST(AnnihilatingPolynomial, WeylCusp) {
    const auto A = OreAlgebra::weyl();
    const OrePoly p = op("x^2", A), q = op("x^3", A);
    const auto f = annihilating_polynomial(p, q, 3, 2);
    ASSERT_TRUE(f.has_value());
    EXPECT_EQ(f->to_string(), "t^2 - s^3");
    EXPECT_TRUE(oracle_evaluate(*f, p, q).empty());
    EXPECT_FALSE(annihilating_polynomial(p, q, 2, 1).has_value());
}

TEST(AnnihilatingPolynomial, WeylNodal) {
    const auto A = OreAlgebra::weyl();
    const OrePoly p = op("x^2", A), q = op("x^3 + x", A);
    const auto r = annihilating_polynomial_auto(p, q);
    EXPECT_EQ(r.f.to_string(), "t^2 - s - 2*s^2 - s^3");
    EXPECT_EQ(r.s_bound, 4u);
    EXPECT_EQ(r.t_bound, 3u);
    EXPECT_EQ(r.doublings, 0u);
    EXPECT_TRUE(oracle_evaluate(r.f, p, q).empty());
    EXPECT_TRUE(evaluate(r.f, p, q).is_zero());
}

TEST(AnnihilatingPolynomial, LinearRelations) {
    const auto q = OreAlgebra::q_power();
    EXPECT_EQ(annihilating_polynomial_auto(op("x^2", q), op("x^4", q)).f.to_string(), "t - s^2");
    const auto w = OreAlgebra::weyl();
    EXPECT_EQ(annihilating_polynomial_auto(op("x", w), op("x^5 + 2*x", w)).f.to_string(), "t - 2*s - s^5");
}

TEST(AnnihilatingPolynomial, PolynomialsInACommonElement) {
    const auto A = OreAlgebra::weyl();
    const OrePoly a = op("x^2 + y", A);
    const OrePoly p = a * a + a, q = a * a * a;
    const auto r = annihilating_polynomial_auto(p, q);
    EXPECT_FALSE(r.f.is_zero());
    EXPECT_TRUE(oracle_evaluate(r.f, p, q).empty());
}

TEST(AnnihilatingPolynomial, RandomCommutingPairs) {
    // Pairs drawn from K[a] for a fixed a commute by construction.
    RandomElements gen(11);
    for (const auto& [A, a_text] : {std::pair{OreAlgebra::weyl(), "x + y"}, std::pair{OreAlgebra::q_power(), "x + 1"}}) {
        const OrePoly a = op(a_text, A);
        for (int t = 0; t < 6; ++t) {
            const BasePoly fp = gen.base_poly_of_degree(1 + gen.index(1));
            const BasePoly fq = gen.base_poly_of_degree(1 + gen.index(1));
            const OrePoly p = evaluate_in(fp, a), q = evaluate_in(fq, a);
            const auto r = annihilating_polynomial_auto(p, q);
            EXPECT_TRUE(oracle_evaluate(r.f, p, q).empty());
        }
    }
}

TEST(AnnihilatingPolynomial, Errors) {
    const auto A = OreAlgebra::weyl();
    EXPECT_EQ(kind_of([&] { (void)annihilating_polynomial_auto(op("x", A), op("y", A)); }), ErrorKind::NotCommuting);
    EXPECT_EQ(kind_of([&] { (void)annihilating_polynomial(op("x", A), op("y", A), 2, 2); }), ErrorKind::NotCommuting);
    const auto D = std::make_shared<const OreAlgebra>(BasePoly::constant(1), BasePoly());
    EXPECT_EQ(kind_of([&] { (void)annihilating_polynomial_auto(op("x", D), op("x^2", D)); }), ErrorKind::NotDomain);
    EXPECT_EQ(kind_of([&] { (void)annihilating_polynomial_auto(op("x", A), op("x", OreAlgebra::q_power())); }),
              ErrorKind::AlgebraMismatch);
}

TEST(AnnihilatingPolynomial, RejectsScalarP) {
    const auto A = OreAlgebra::weyl();
    EXPECT_EQ(kind_of([&] { (void)annihilating_polynomial_auto(op("3", A), op("x", A)); }), ErrorKind::Degenerate);
    EXPECT_EQ(kind_of([&] { (void)annihilating_polynomial_auto(OrePoly(A), op("x", A)); }), ErrorKind::Degenerate);
    EXPECT_EQ(kind_of([&] { (void)annihilating_polynomial(op("3", A), op("x", A), 1, 1); }), ErrorKind::Degenerate);
}
