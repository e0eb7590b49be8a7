#include "mzlab/error.hpp"
#include "mzlab/parse.hpp"
#include "mzlab/polynomial.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace mzlab;
using namespace mzlab::testing;

namespace {

// f(X M) by plain expansion: x_j -> sum_i M(i, j) x_i.
Polynomial substitute_by_expansion(const Polynomial& f, const Matrix& m)
{
    const Ring& ring = f.ring();
    std::vector<Polynomial> images;
    for (std::size_t j = 0; j < ring.n; ++j)
        images.push_back(Polynomial::linear_form(ring, m.column(j)));
    Polynomial out(ring);
    for (const auto& [beta, c] : f.terms()) {
        Polynomial term = Polynomial::constant(ring, c);
        for (std::size_t j = 0; j < ring.n; ++j)
            for (unsigned e = 0; e < beta[j]; ++e)
                term = term * images[j];
        out += term;
    }
    return out;
}

std::size_t binomial(std::size_t n, std::size_t k)
{
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

}  // namespace

TEST(Polynomial, FormatsInGrlexDescendingOrder)
{
    const Ring ring{3, Field::rationals()};
    Polynomial f(ring);
    f.add_term({0, 0, 1}, q(-1, 2));
    f.add_term({2, 1, 0}, q(1));
    EXPECT_EQ(to_string(f), "x1^2*x2 - 1/2*x3");
    EXPECT_EQ(to_string(Polynomial(ring)), "0");
    EXPECT_EQ(to_string(Polynomial::constant(ring, q(-3))), "-3");

    const Field k = Field::cyclotomic(3);
    const Ring r3{2, k};
    Polynomial g = Polynomial::monomial(r3, {1, 0}, k.one() + k.zeta());
    g.add_term({0, 0}, k.zeta());
    EXPECT_EQ(to_string(g), "(1 + z)*x1 + z");
}

TEST(Polynomial, RingAxioms)
{
    Rng rng(21);
    for (unsigned m : {1u, 4u}) {
        const Ring ring{3, Field::cyclotomic(m)};
        for (int t = 0; t < 30; ++t) {
            const auto f = random_polynomial(ring, rng, 3), g = random_polynomial(ring, rng, 3),
                       h = random_polynomial(ring, rng, 3);
            EXPECT_EQ(f * (g + h), f * g + f * h);
            EXPECT_EQ((f * g) * h, f * (g * h));
            EXPECT_EQ(f * g, g * f);
            EXPECT_TRUE((f - f).is_zero());
            EXPECT_EQ(f.pow(3), f * f * f);
            if (!f.is_zero() && !g.is_zero())
                EXPECT_EQ((f * g).degree(), f.degree() + g.degree());
        }
    }
}

TEST(Polynomial, LeadingTermIsMultiplicative)
{
    Rng rng(22);
    const Ring ring{3, Field::cyclotomic(3)};
    const std::vector<MonomialOrder> orders{MonomialOrder::lex(3), MonomialOrder::grlex(3),
                                            MonomialOrder(MonomialOrder::Kind::grlex, {2, 1, 0}),
                                            MonomialOrder(MonomialOrder::Kind::lex, {1, 2, 0})};
    for (const auto& order : orders)
        for (int t = 0; t < 40; ++t) {
            const auto f = random_polynomial(ring, rng, 4), g = random_polynomial(ring, rng, 4);
            if (f.is_zero() || g.is_zero())
                continue;
            const auto [bf, cf] = leading_term(f, order);
            const auto [bg, cg] = leading_term(g, order);
            const auto [bfg, cfg] = leading_term(f * g, order);
            EXPECT_EQ(bfg, bf + bg) << order.to_string();
            EXPECT_EQ(cfg, cf * cg);
        }
    EXPECT_THROW(leading_term(Polynomial(ring), orders[0]), PreconditionError);
}

TEST(Polynomial, OmegaDegreeIsAdditive)
{
    Rng rng(23);
    const Ring ring{3, Field::rationals()};
    for (int t = 0; t < 60; ++t) {
        const auto f = random_polynomial(ring, rng, 4), g = random_polynomial(ring, rng, 4);
        const auto df = deg_omega(f, default_omega()), dg = deg_omega(g, default_omega());
        const auto dfg = deg_omega(f * g, default_omega());
        if (!df || !dg)
            EXPECT_FALSE(dfg.has_value());
        else
            EXPECT_EQ(*dfg, *df + *dg);
    }
    EXPECT_EQ(deg_omega(Polynomial(ring), default_omega()), std::nullopt);
    EXPECT_EQ(deg_omega(parse_polynomial("x1^3*x2 + x3^2", ring), default_omega()), 2);
}

TEST(Polynomial, LinearSubstitutionMatchesExpansionAndComposes)
{
    Rng rng(24);
    for (unsigned m : {1u, 3u}) {
        const Field k = Field::cyclotomic(m);
        const Ring ring{3, k};
        for (int t = 0; t < 20; ++t) {
            const auto f = random_polynomial(ring, rng, 4), g = random_polynomial(ring, rng, 3);
            const Matrix a = random_matrix(k, rng, 3, 3), b = random_matrix(k, rng, 3, 3);
            EXPECT_EQ(substitute_linear(f, a), substitute_by_expansion(f, a));
            EXPECT_EQ(substitute_linear(substitute_linear(f, a), b), substitute_linear(f, b * a));
            EXPECT_EQ(substitute_linear(f * g, a), substitute_linear(f, a) * substitute_linear(g, a));
        }
    }
}

TEST(Polynomial, GradedBasis)
{
    for (std::size_t n = 1; n <= 4; ++n)
        for (unsigned d = 0; d <= 6; ++d) {
            const auto basis = graded_basis(n, d);
            EXPECT_EQ(basis.size(), binomial(n + d - 1, d));
            EXPECT_EQ(graded_dimension(n, d), basis.size());
            for (std::size_t i = 1; i < basis.size(); ++i)
                EXPECT_TRUE(GrlexDescending{}(basis[i - 1], basis[i]));
            for (const auto& b : basis)
                EXPECT_EQ(b.degree(), d);
        }
    const auto b2 = graded_basis(3, 2);
    EXPECT_EQ(b2.front(), (MultiIndex{2, 0, 0}));
    EXPECT_EQ(b2.back(), (MultiIndex{0, 0, 2}));
}

TEST(Polynomial, CoordinatesAndComponents)
{
    Rng rng(25);
    const Ring ring{3, Field::cyclotomic(4)};
    for (int t = 0; t < 20; ++t) {
        const auto f = random_polynomial(ring, rng, 5, 6);
        Polynomial sum(ring);
        for (const auto& [d, part] : homogeneous_components(f)) {
            EXPECT_TRUE(part.is_homogeneous());
            EXPECT_EQ(static_cast<unsigned>(part.degree()), d);
            const auto basis = graded_basis(3, d);
            EXPECT_EQ(from_coordinates(ring, to_coordinates(part, d, basis), basis), part);
            sum += part;
        }
        EXPECT_EQ(sum, f);
    }
}

TEST(Polynomial, CapAndCompatibility)
{
    const Ring small{2, Field::rationals(), 5};
    Polynomial f(small);
    EXPECT_THROW(f.add_term({3, 3}, q(1)), DegreeCapExceeded);
    EXPECT_THROW(Polynomial::variable(small, 0).pow(6), DegreeCapExceeded);
    const Ring three{3, Field::rationals()};
    EXPECT_THROW(Polynomial::variable(small, 0) + Polynomial::variable(three, 0), DimensionMismatch);
    const Ring other{2, Field::cyclotomic(3)};
    EXPECT_THROW(Polynomial::variable(small, 0) * Polynomial::variable(other, 0), FieldMismatch);
    EXPECT_THROW(f.add_term({1, 1, 1}, q(1)), DimensionMismatch);
}

TEST(MonomialOrder, TextForm)
{
    EXPECT_EQ(MonomialOrder::lex(3).to_string(), "lex:1,2,3");
    EXPECT_EQ(MonomialOrder(MonomialOrder::Kind::grlex, {2, 0, 1}).to_string(), "grlex:3,1,2");
    const auto lex = MonomialOrder::lex(3);
    EXPECT_TRUE(lex.greater({1, 0, 0}, {0, 5, 5}));
    EXPECT_TRUE(MonomialOrder::grlex(3).greater({0, 5, 5}, {1, 0, 0}));
}
