#include "mzlab/error.hpp"
#include "mzlab/matrix.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

using namespace mzlab;
using namespace mzlab::testing;

namespace {

// Leibniz expansion, independent of elimination.
Scalar leibniz_det(const Matrix& m)
{
    const std::size_t n = m.rows();
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    Scalar total = m.field().zero();
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                inversions += p[i] > p[j];
        Scalar term = m.field().one();
        for (std::size_t i = 0; i < n; ++i)
            term *= m(i, p[i]);
        total += inversions % 2 ? -term : term;
    } while (std::next_permutation(p.begin(), p.end()));
    return total;
}

}  // namespace

TEST(Matrix, DeterminantMatchesLeibniz)
{
    Rng rng(3);
    for (unsigned m : {1u, 3u, 4u})
        for (std::size_t n = 1; n <= 4; ++n)
            for (int t = 0; t < 10; ++t) {
                const Matrix a = random_matrix(Field::cyclotomic(m), rng, n, n);
                EXPECT_EQ(a.determinant(), leibniz_det(a));
            }
}

TEST(Matrix, InverseAndProducts)
{
    Rng rng(4);
    for (unsigned m : {1u, 3u, 4u}) {
        const Field k = Field::cyclotomic(m);
        for (int t = 0; t < 10; ++t) {
            const Matrix a = random_invertible(k, rng, 3);
            const Matrix b = random_matrix(k, rng, 3, 3);
            EXPECT_EQ(a * a.inverse(), Matrix::identity(k, 3));
            EXPECT_EQ((a * b).determinant(), a.determinant() * b.determinant());
            EXPECT_EQ((a * b).transpose(), b.transpose() * a.transpose());
            EXPECT_EQ(a.pow(3), a * a * a);
        }
    }
    Matrix singular(Field::rationals(), 2, 2);
    singular(0, 0) = q(1);
    singular(1, 0) = q(2);
    EXPECT_THROW(singular.inverse(), PreconditionError);
}

TEST(Matrix, RankNullity)
{
    Rng rng(6);
    const Field k = Field::cyclotomic(3);
    for (int t = 0; t < 20; ++t) {
        // product of 4x2 and 2x5 has rank at most 2
        const Matrix a = random_matrix(k, rng, 4, 2) * random_matrix(k, rng, 2, 5);
        const auto null = a.nullspace();
        EXPECT_LE(a.rank(), 2u);
        EXPECT_EQ(a.rank() + null.size(), 5u);
        for (const auto& v : null)
            EXPECT_TRUE(is_zero(a * v));
    }
}

TEST(Matrix, DimensionChecks)
{
    const Field k = Field::rationals();
    EXPECT_THROW(Matrix(k, 2, 3) * Matrix(k, 2, 3), DimensionMismatch);
    EXPECT_THROW(Matrix(k, 2, 2) + Matrix(k, 3, 3), DimensionMismatch);
    EXPECT_THROW(Matrix(k, 2, 3).determinant(), DimensionMismatch);
}

TEST(Echelon, KernelRelationsAreRelations)
{
    Rng rng(8);
    const Field k = Field::cyclotomic(4);
    for (int t = 0; t < 10; ++t) {
        const Matrix cols = random_matrix(k, rng, 4, 3) * random_matrix(k, rng, 3, 6);
        Echelon e(k, 4, 6);
        std::size_t dependent = 0;
        for (std::size_t j = 0; j < 6; ++j) {
            Vector payload = zero_vector(k, 6);
            payload[j] = k.one();
            if (auto rel = e.insert(cols.column(j), payload)) {
                ++dependent;
                EXPECT_TRUE(is_zero(cols * *rel));
                EXPECT_FALSE(is_zero(*rel));
            }
        }
        EXPECT_EQ(e.rank(), cols.rank());
        EXPECT_EQ(dependent, 6 - cols.rank());
        // every stored row equals cols * payload
        for (std::size_t r = 0; r < e.rank(); ++r)
            EXPECT_EQ(cols * e.payloads()[r], e.rows()[r]);
    }
}

TEST(Echelon, ReduceAndContain)
{
    Rng rng(9);
    const Field k = Field::rationals();
    Echelon a(k, 4), b(k, 4);
    const Matrix basis = random_matrix(k, rng, 4, 2);
    a.insert(basis.column(0));
    a.insert(basis.column(1));
    b.insert(basis.column(0));
    Vector sum = basis.column(0);
    for (std::size_t i = 0; i < 4; ++i)
        sum[i] += basis.column(1)[i].scaled(3);
    b.insert(sum);
    EXPECT_TRUE(a == b);
    EXPECT_TRUE(a.contains(sum));
    const auto red = a.reduce(sum);
    EXPECT_TRUE(is_zero(red.residual));
    Vector outside = zero_vector(k, 4);
    outside[0] = k.one();
    outside[3] = k.one();
    if (!a.contains(outside)) {
        Echelon c = a;
        c.insert(outside);
        EXPECT_TRUE(c.contains(a));
        EXPECT_FALSE(a.contains(c));
    }
}
