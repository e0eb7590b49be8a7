#pragma once

// Random generators shared by the property tests. Seeds are fixed so failures reproduce.

#include "mzlab/field.hpp"
#include "mzlab/linmaps.hpp"
#include "mzlab/polynomial.hpp"

#include <random>

namespace mzlab::testing {

using Rng = std::mt19937_64;

inline Rational random_rational(Rng& rng, int num_bound = 5, int den_bound = 4)
{
    std::uniform_int_distribution<int> num(-num_bound, num_bound);
    std::uniform_int_distribution<int> den(1, den_bound);
    Rational r(num(rng), den(rng));
    r.canonicalize();
    return r;
}

inline Scalar random_scalar(Field k, Rng& rng, bool nonzero = false)
{
    for (;;) {
        std::vector<Rational> c(k.degree());
        std::bernoulli_distribution keep(0.6);
        for (auto& x : c)
            if (keep(rng))
                x = random_rational(rng);
        Scalar s = Scalar::from_coeffs(k, c);
        if (!nonzero || !s.is_zero())
            return s;
    }
}

inline MultiIndex random_multiindex(Rng& rng, std::size_t n, unsigned degree)
{
    MultiIndex beta(n);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (unsigned i = 0; i < degree; ++i)
        ++beta[pick(rng)];
    return beta;
}

inline Polynomial random_polynomial(const Ring& ring, Rng& rng, unsigned max_degree, unsigned terms = 4)
{
    Polynomial f(ring);
    std::uniform_int_distribution<unsigned> deg(0, max_degree);
    for (unsigned t = 0; t < terms; ++t)
        f.add_term(random_multiindex(rng, ring.n, deg(rng)), random_scalar(ring.field, rng));
    return f;
}

inline Polynomial random_homogeneous(const Ring& ring, Rng& rng, unsigned degree, unsigned terms = 4)
{
    Polynomial f(ring);
    for (unsigned t = 0; t < terms; ++t)
        f.add_term(random_multiindex(rng, ring.n, degree), random_scalar(ring.field, rng));
    return f;
}

inline Matrix random_matrix(Field k, Rng& rng, std::size_t rows, std::size_t cols)
{
    Matrix m(k, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = random_scalar(k, rng);
    return m;
}

inline Matrix random_invertible(Field k, Rng& rng, std::size_t n)
{
    for (;;) {
        Matrix m = random_matrix(k, rng, n, n);
        if (!m.determinant().is_zero())
            return m;
    }
}

inline Scalar q(long p, long d = 1)
{
    Rational r(p, d);
    r.canonicalize();
    return Field::rationals().from_rational(r);
}

}  // namespace mzlab::testing
