#pragma once

// Linear derivations, linear endomorphisms and linear E-derivations of K[x1..xn].
//
// Every map is described by an n x n matrix A acting on the row of variables:
// eta(X) = X A, so column j of A holds the coefficients of eta(x_j). For an
// E-derivation id - phi the stored matrix is that of phi.

#include "mzlab/matrix.hpp"
#include "mzlab/polynomial.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mzlab {

enum class MapKind { derivation, endomorphism, ederivation };

std::string to_string(MapKind kind);

class LinearMapSpec {
public:
    /// Throws DimensionMismatch unless `matrix` is square.
    LinearMapSpec(MapKind kind, Matrix matrix);

    MapKind kind() const noexcept { return kind_; }
    const Matrix& matrix() const noexcept { return matrix_; }
    std::size_t n() const noexcept { return matrix_.rows(); }
    Field field() const noexcept { return matrix_.field(); }

    /// eta(x_{j+1}) as a linear form.
    Polynomial generator_image(const Ring& ring, std::size_t j) const;

    friend bool operator==(const LinearMapSpec&, const LinearMapSpec&) = default;

private:
    MapKind kind_;
    Matrix matrix_;
};

/// The canonical families of linear maps up to conjugation, plus the map phi_a used for
/// the root-of-unity case of the single Jordan block.
enum class Family {
    diag,     ///< x_i -> a_i x_i
    jordan2,  ///< diagonal on x_1..x_{n-2}, one 2x2 block on (x_{n-1}, x_n)
    jordan3,  ///< one Jordan block of full size n with eigenvalue a
    phi_a,    ///< phi_a(x1) = a x1, phi_a(x2) = a x1 + a x2, phi_a(x3) = -a/2 x1 - a x2 + a x3
};

struct CanonicalCase {
    Family family = Family::diag;
    /// derivation or ederivation; endomorphism yields the bare phi.
    MapKind kind = MapKind::derivation;
    std::size_t n = 3;
    /// diag: n values; jordan2: a_1..a_{n-1}; jordan3, phi_a: a single value.
    std::vector<Scalar> params;

    Field field() const;
    /// The eigenvalue vector alpha of a diag or jordan2 case: (a_1..a_{n-1}, a_{n-1}) for jordan2.
    std::vector<Scalar> alpha() const;
};

/// Short name such as `diag-deriv`, `jordan2-ederiv`, `phi-a`.
std::string case_name(const CanonicalCase& c);
/// Inverse of case_name; std::nullopt for unknown names. Params are left empty.
std::optional<CanonicalCase> case_from_name(const std::string& name, std::size_t n = 3);

/// Invertible change of variables sigma(X) = X S.
class ConjugationMap {
public:
    /// Throws PreconditionError when `sigma` is singular.
    explicit ConjugationMap(Matrix sigma);

    const Matrix& matrix() const noexcept { return sigma_; }
    const Matrix& inverse_matrix() const noexcept { return inverse_; }
    ConjugationMap inverse() const { return ConjugationMap(inverse_); }

    Polynomial apply(const Polynomial& f) const { return substitute_linear(f, sigma_); }
    Polynomial apply_inverse(const Polynomial& f) const { return substitute_linear(f, inverse_); }

private:
    Matrix sigma_;
    Matrix inverse_;
};

/// Leibniz extension of x_j -> (X A)_j. Throws PreconditionError for other kinds.
Polynomial derivation_apply(const LinearMapSpec& spec, const Polynomial& f);
/// f -> f(X A).
Polynomial endomorphism_apply(const LinearMapSpec& spec, const Polynomial& f);
/// f -> f - f(X A).
Polynomial ederivation_apply(const LinearMapSpec& spec, const Polynomial& f);
/// Dispatch on spec.kind().
Polynomial apply(const LinearMapSpec& spec, const Polynomial& f);

/// Least k <= n with A^k = 0.
std::optional<unsigned> is_nilpotent(const Matrix& a);

/// e^D as an endomorphism with matrix sum_{k < index} A^k / k!.
/// Throws PreconditionError unless `spec` is a nilpotent derivation.
LinearMapSpec exp_derivation(const LinearMapSpec& spec);

/// sigma eta sigma^{-1}; its matrix is S A S^{-1}.
LinearMapSpec conjugate(const ConjugationMap& sigma, const LinearMapSpec& spec);

/// Exact matrix of a canonical case. Throws PreconditionError on a malformed case.
LinearMapSpec canonical(const CanonicalCase& c);

Matrix phi_a_matrix(const Scalar& a);
/// id - phi_a.
LinearMapSpec delta_a(const Scalar& a);
/// D = x1 d/dx2 - x2 d/dx3.
LinearMapSpec standard_nilpotent_derivation(Field field);

/// An invertible S with S J S^{-1} = A, found from the nullspace of S -> S J - A S.
/// Throws PreconditionError when A and J are not similar.
Matrix similarity_solve(const Matrix& a, const Matrix& j);

/// Characteristic polynomial det(x I - A), lowest degree first.
std::vector<Scalar> characteristic_polynomial(const Matrix& a);

struct Jordanization {
    CanonicalCase form;
    /// conjugate(sigma, canonical(form)) reproduces the input map.
    ConjugationMap sigma;
};

/// Canonical form of a map whose matrix is rational with rational eigenvalues, n <= 3.
/// Throws PreconditionError otherwise.
Jordanization jordanize(const LinearMapSpec& spec);

}  // namespace mzlab
