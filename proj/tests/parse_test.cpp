#include "mzlab/error.hpp"
#include "mzlab/parse.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace mzlab;
using namespace mzlab::testing;

namespace {

std::size_t error_position(std::string_view text, const Ring& ring)
{
    try {
        parse_polynomial(text, ring);
    } catch (const ParseError& e) {
        return e.position();
    }
    ADD_FAILURE() << "no error for " << text;
    return std::string::npos;
}

std::string error_message(std::string_view text, const Ring& ring)
{
    try {
        parse_polynomial(text, ring);
    } catch (const ParseError& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST(Parse, BasicExpressions)
{
    const Ring ring{3, Field::rationals()};
    const auto f = parse_polynomial("x1^2*x2 - 1/2*x3", ring);
    Polynomial expect(ring);
    expect.add_term({2, 1, 0}, q(1));
    expect.add_term({0, 0, 1}, q(-1, 2));
    EXPECT_EQ(f, expect);
    EXPECT_EQ(to_string(f), "x1^2*x2 - 1/2*x3");
    EXPECT_EQ(parse_polynomial("  x1 *x2^0 ", ring), Polynomial::variable(ring, 0));
    EXPECT_EQ(parse_polynomial("-(x1 - x2)*(x1 + x2)", ring), parse_polynomial("x2^2 - x1^2", ring));
    EXPECT_EQ(parse_polynomial("6/4", ring), Polynomial::constant(ring, q(3, 2)));
    EXPECT_EQ(parse_polynomial("+x3", ring), Polynomial::variable(ring, 2));
}

TEST(Parse, PhiImageForm)
{
    // phi_a(x3) / a
    const Ring ring{3, Field::rationals()};
    const auto f = parse_polynomial("(-1/2)*x1 - x2 + x3", ring);
    const Scalar coeffs[] = {q(-1, 2), q(-1), q(1)};
    EXPECT_EQ(f, Polynomial::linear_form(ring, coeffs));
    EXPECT_EQ(to_string(f), "-1/2*x1 - x2 + x3");
}

TEST(Parse, RootOfUnity)
{
    const Field k = Field::cyclotomic(4);
    const Ring ring{2, k};
    EXPECT_EQ(parse_scalar("z^2", k), k.from_int(-1));
    EXPECT_EQ(parse_scalar("z^-1", k), -k.zeta());
    EXPECT_EQ(parse_scalar("-1/2 + z^2", k), k.from_rational(Rational(-3, 2)));
    EXPECT_EQ(parse_polynomial("z*x1", ring), Polynomial::monomial(ring, {1, 0}, k.zeta()));
    const Ring qring{2, Field::rationals()};
    EXPECT_EQ(error_position("x1 + z", qring), 5u);
    EXPECT_NE(error_message("x1 + z", qring).find("m > 1"), std::string::npos);
}

TEST(Parse, ErrorsCarryPositions)
{
    const Ring ring{3, Field::rationals()};
    EXPECT_EQ(error_position("x0 + 1", ring), 1u);
    EXPECT_NE(error_message("x0 + 1", ring).find("variable index out of range"), std::string::npos);
    EXPECT_EQ(error_position("x4", ring), 1u);
    EXPECT_EQ(error_position("x1x2", ring), 2u);
    EXPECT_EQ(error_position("x1^-2", ring), 3u);
    EXPECT_NE(error_message("x1^-2", ring).find("negative exponent"), std::string::npos);
    EXPECT_EQ(error_position("(x1 + x2", ring), 8u);
    EXPECT_EQ(error_position("x1 + ", ring), 5u);
    EXPECT_EQ(error_position("", ring), 0u);
    EXPECT_EQ(error_position("1/0", ring), 2u);
    EXPECT_EQ(error_position("2 x1", ring), 2u);
    EXPECT_THROW(parse_scalar("x1", Field::rationals()), ParseError);
}

TEST(Parse, ScalarListsAndExponents)
{
    const Field k = Field::cyclotomic(3);
    const auto v = parse_scalar_list("1,(-1/2 + z),z^2", k);
    ASSERT_EQ(v.size(), 3u);
    EXPECT_EQ(v[1], k.zeta() - k.from_rational(Rational(1, 2)));
    try {
        parse_scalar_list("1,2,x", k);
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position(), 4u);
    }
    EXPECT_EQ(parse_multiindex("2, 0,1", 3), (MultiIndex{2, 0, 1}));
    EXPECT_THROW(parse_multiindex("2,0", 3), ParseError);
    EXPECT_THROW(parse_multiindex("2,-1,0", 3), ParseError);
}

TEST(Parse, Orders)
{
    EXPECT_EQ(parse_order("lex", 3).to_string(), "lex:1,2,3");
    EXPECT_EQ(parse_order("grlex:3,1,2", 3).to_string(), "grlex:3,1,2");
    EXPECT_EQ(parse_order("grlex:312", 3).to_string(), "grlex:3,1,2");
    EXPECT_THROW(parse_order("lex:1,1,2", 3), ParseError);
    EXPECT_THROW(parse_order("revlex", 3), ParseError);
    EXPECT_THROW(parse_order("lex:1,2,4", 3), ParseError);
}

class RoundTrip : public ::testing::TestWithParam<std::pair<std::size_t, unsigned>> {};

TEST_P(RoundTrip, FiveHundredRandomPolynomials)
{
    const auto [n, m] = GetParam();
    const Ring ring{n, Field::cyclotomic(m)};
    Rng rng(1000 + 10 * n + m);
    for (int t = 0; t < 500; ++t) {
        const auto f = random_polynomial(ring, rng, 5, 1 + t % 6);
        const std::string text = to_string(f);
        EXPECT_EQ(parse_polynomial(text, ring), f) << text;
    }
}

INSTANTIATE_TEST_SUITE_P(Configs, RoundTrip,
                         ::testing::Values(std::pair<std::size_t, unsigned>{3, 1}, std::pair<std::size_t, unsigned>{3, 2},
                                           std::pair<std::size_t, unsigned>{3, 4}, std::pair<std::size_t, unsigned>{2, 5}));
