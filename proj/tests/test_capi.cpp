#include "oreext/oreext.h"

#include <gtest/gtest.h>

#include <memory>
#include <string>

namespace {

struct AlgebraDeleter {
    void operator()(ore_algebra* a) const { ore_algebra_free(a); }
};
struct OperatorDeleter {
    void operator()(ore_operator* p) const { ore_operator_free(p); }
};
using AlgebraHandle = std::unique_ptr<ore_algebra, AlgebraDeleter>;
using OperatorHandle = std::unique_ptr<ore_operator, OperatorDeleter>;

AlgebraHandle make_algebra(const char* sigma, const char* delta) {
    ore_algebra* a = nullptr;
    EXPECT_EQ(ore_algebra_create(sigma, delta, &a), ORE_OK) << ore_last_error();
    return AlgebraHandle(a);
}

OperatorHandle parse(const ore_algebra* a, const char* text) {
    ore_operator* p = nullptr;
    EXPECT_EQ(ore_operator_parse(a, text, &p), ORE_OK) << ore_last_error();
    return OperatorHandle(p);
}

std::string take(char* s) {
    std::string out = s ? s : "";
    ore_string_free(s);
    return out;
}

std::string text_of(const ore_operator* p) {
    char* s = nullptr;
    EXPECT_EQ(ore_operator_to_string(p, &s), ORE_OK);
    return take(s);
}

} // namespace

TEST(CApi, Arithmetic) {
    auto W = make_algebra("y", "1");
    EXPECT_EQ(ore_algebra_sigma_degree(W.get()), 1u);
    char* desc = nullptr;
    ASSERT_EQ(ore_algebra_describe(W.get(), &desc), ORE_OK);
    EXPECT_EQ(take(desc), "Q[y][x; y -> y, y -> 1]");

    auto x = parse(W.get(), "x");
    auto y2 = parse(W.get(), "y^2");
    ore_operator* prod = nullptr;
    ASSERT_EQ(ore_mul(x.get(), y2.get(), &prod), ORE_OK);
    OperatorHandle prod_h(prod);
    EXPECT_EQ(text_of(prod), "y^2*x + 2*y");

    ore_operator* comm = nullptr;
    ASSERT_EQ(ore_commutator(x.get(), y2.get(), &comm), ORE_OK);
    OperatorHandle comm_h(comm);
    EXPECT_EQ(text_of(comm), "2*y");

    int64_t deg = 0;
    int bottom = 0;
    ASSERT_EQ(ore_chi(prod, &deg, &bottom), ORE_OK);
    EXPECT_EQ(deg, 1);
    EXPECT_EQ(bottom, 0);
    char* lc = nullptr;
    ASSERT_EQ(ore_leading_coeff(prod, &lc), ORE_OK);
    EXPECT_EQ(take(lc), "y^2");

    auto zero = parse(W.get(), "x - x");
    int is_zero = 0;
    ASSERT_EQ(ore_is_zero(zero.get(), &is_zero), ORE_OK);
    EXPECT_EQ(is_zero, 1);
    ASSERT_EQ(ore_chi(zero.get(), &deg, &bottom), ORE_OK);
    EXPECT_EQ(bottom, 1);
    EXPECT_EQ(ore_leading_coeff(zero.get(), &lc), ORE_ERR_INVALID_ARGUMENT);
}

TEST(CApi, ErrorCodes) {
    ore_algebra* a = nullptr;
    EXPECT_EQ(ore_algebra_create("0", "0", &a), ORE_ERR_INVALID_ARGUMENT);
    EXPECT_EQ(a, nullptr);
    EXPECT_EQ(ore_algebra_create("y^", "0", &a), ORE_ERR_PARSE);
    EXPECT_NE(std::string(ore_last_error()).find("offset 2"), std::string::npos);
    EXPECT_EQ(ore_algebra_create(nullptr, "0", &a), ORE_ERR_INVALID_ARGUMENT);
    EXPECT_EQ(ore_algebra_load("/nonexistent/algebra.cfg", &a), ORE_ERR_IO);
    EXPECT_EQ(ore_algebra_from_config("sigma_y=y\nbogus=1\n", &a), ORE_ERR_PARSE);

    auto W = make_algebra("y", "1");
    auto Q = make_algebra("y^2", "0");
    auto p = parse(W.get(), "x");
    auto q = parse(Q.get(), "x");
    ore_operator* out = nullptr;
    EXPECT_EQ(ore_mul(p.get(), q.get(), &out), ORE_ERR_ALGEBRA_MISMATCH);
    EXPECT_EQ(out, nullptr);

    EXPECT_STREQ(ore_status_name(ORE_ERR_NOT_COMMUTING), "operators do not commute");
}

TEST(CApi, Reports) {
    auto Q = make_algebra("y^2", "0");
    auto a = parse(Q.get(), "x^2");
    char* out = nullptr;
    ASSERT_EQ(ore_basis_report(a.get(), 1, 6, ORE_AUTO_BOUND, 3, ORE_FORMAT_MACHINE, &out), ORE_OK);
    const std::string basis = take(out);
    EXPECT_NE(basis.find("\"rank\":2"), std::string::npos) << basis;

    int passed = 0;
    ASSERT_EQ(ore_check_d_report(a.get(), 1, 6, ORE_AUTO_BOUND, 3, ORE_FORMAT_TEXT, &out, &passed), ORE_OK);
    take(out);
    EXPECT_EQ(passed, 1);

    int commutative = 0;
    ASSERT_EQ(ore_check_commutative_report(a.get(), 6, ORE_AUTO_BOUND, 3, ORE_FORMAT_TEXT, &out, &commutative),
              ORE_OK);
    take(out);
    EXPECT_EQ(commutative, 1);

    size_t dim = 0;
    ASSERT_EQ(ore_leading_space_dim(a.get(), 3, 4, &dim), ORE_OK);
    EXPECT_EQ(dim, 1u);
    int64_t bound = -1;
    int exists = 0;
    ASSERT_EQ(ore_leading_coeff_degree_bound(a.get(), 3, &bound, &exists), ORE_OK);
    EXPECT_EQ(exists, 1);
    EXPECT_EQ(bound, 0);

    auto W = make_algebra("y", "1");
    auto p = parse(W.get(), "x^2");
    auto q = parse(W.get(), "x^3");
    auto y = parse(W.get(), "y");
    ASSERT_EQ(ore_annihilate_report(p.get(), q.get(), 0, 0, 5, ORE_FORMAT_TEXT, &out), ORE_OK);
    EXPECT_EQ(take(out), "t^2 - s^3\n");
    EXPECT_EQ(ore_annihilate_report(p.get(), y.get(), 0, 0, 5, ORE_FORMAT_TEXT, &out), ORE_ERR_NOT_COMMUTING);
    EXPECT_EQ(ore_annihilate_report(p.get(), q.get(), 1, 1, 5, ORE_FORMAT_TEXT, &out), ORE_ERR_BUDGET_EXHAUSTED);

    ASSERT_EQ(ore_validate_axioms_report(W.get(), 50, 3, 1, ORE_FORMAT_TEXT, &out, &passed), ORE_OK);
    take(out);
    EXPECT_EQ(passed, 1);
    auto D = make_algebra("1", "0");
    ASSERT_EQ(ore_validate_axioms_report(D.get(), 50, 3, 1, ORE_FORMAT_TEXT, &out, &passed), ORE_OK);
    EXPECT_NE(take(out).find("NOT certified"), std::string::npos);
    EXPECT_EQ(passed, 0);
    auto dx = parse(D.get(), "x");
    EXPECT_EQ(ore_centralizer_report(dx.get(), 4, ORE_AUTO_BOUND, 3, ORE_FORMAT_TEXT, &out), ORE_ERR_NOT_DOMAIN);
}

TEST(CApi, NullArguments) {
    char* out = nullptr;
    EXPECT_EQ(ore_operator_to_string(nullptr, &out), ORE_ERR_INVALID_ARGUMENT);
    EXPECT_EQ(ore_mul(nullptr, nullptr, nullptr), ORE_ERR_INVALID_ARGUMENT);
    ore_algebra_free(nullptr);
    ore_operator_free(nullptr);
    ore_string_free(nullptr);
}
