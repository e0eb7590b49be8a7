#pragma once

// Closed expansions of the canonical maps on a single monomial, written out term by term.
// They are used as independent references for the matrix-driven apply().

#include "mzlab/image_engine.hpp"
#include "mzlab/polynomial.hpp"

namespace mzlab::testing {

inline Scalar binom(Field k, unsigned n, unsigned i)
{
    Integer c;
    mpz_bin_uiui(c.get_mpz_t(), n, i);
    return k.from_rational(Rational(c));
}

/// Block derivation: D(X^b) = (alpha.b) X^b + b_{n-1} X^{b - e_{n-1} + e_n}.
inline Polynomial jordan2_derivation_formula(const Ring& ring, const std::vector<Scalar>& alpha, const MultiIndex& b)
{
    const std::size_t n = ring.n;
    Polynomial out = Polynomial::monomial(ring, b, alpha_dot(alpha, b));
    if (b[n - 2] > 0) {
        MultiIndex shifted = b;
        --shifted[n - 2];
        ++shifted[n - 1];
        out.add_term(shifted, ring.field.from_int(b[n - 2]));
    }
    return out;
}

/// Block E-derivation: delta(X^b) = (1 - alpha^b) X^b - sum_{i=1}^{b_{n-1}} C(b_{n-1}, i) alpha^{b - i e_{n-1}}
/// X^{b - i e_{n-1} + i e_n}.
inline Polynomial jordan2_ederivation_formula(const Ring& ring, const std::vector<Scalar>& alpha, const MultiIndex& b)
{
    const std::size_t n = ring.n;
    const Field k = ring.field;
    Polynomial out = Polynomial::monomial(ring, b, k.one() - alpha_power(alpha, b));
    for (unsigned i = 1; i <= b[n - 2]; ++i) {
        MultiIndex lowered = b;
        lowered[n - 2] -= i;
        MultiIndex target = lowered;
        target[n - 1] += i;
        out.add_term(target, -(binom(k, b[n - 2], i) * alpha_power(alpha, lowered)));
    }
    return out;
}

/// delta_a(X^b) = X^b - a^{|b|} x1^{b1} (x1 + x2)^{b2} (-1/2 x1 - x2 + x3)^{b3}.
inline Polynomial delta_a_formula(const Ring& ring, const Scalar& a, const MultiIndex& b)
{
    const Field k = ring.field;
    const Polynomial x1 = Polynomial::variable(ring, 0), x2 = Polynomial::variable(ring, 1),
                     x3 = Polynomial::variable(ring, 2);
    const Polynomial l2 = x1 + x2;
    const Polynomial l3 = x1.scaled(k.from_rational(Rational(-1, 2))) - x2 + x3;
    Polynomial image = Polynomial::constant(ring, a.pow(b.degree()));
    image = image * x1.pow(b[0]) * l2.pow(b[1]) * l3.pow(b[2]);
    return Polynomial::monomial(ring, b) - image;
}

}  // namespace mzlab::testing
