#pragma once

// Sparse multivariate polynomials over Q(zeta_m).

#include "mzlab/field.hpp"
#include "mzlab/matrix.hpp"

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace mzlab {

inline constexpr unsigned kDefaultPolynomialCap = 32;

/// Exponent vector beta of the monomial X^beta.
class MultiIndex {
public:
    MultiIndex() = default;
    explicit MultiIndex(std::size_t n) : e_(n, 0) {}
    MultiIndex(std::initializer_list<unsigned> e) : e_(e) {}
    explicit MultiIndex(std::vector<unsigned> e) : e_(std::move(e)) {}
    /// e_i (0-based i).
    static MultiIndex unit(std::size_t n, std::size_t i);

    std::size_t size() const noexcept { return e_.size(); }
    unsigned operator[](std::size_t i) const { return e_[i]; }
    unsigned& operator[](std::size_t i) { return e_[i]; }
    const std::vector<unsigned>& exponents() const noexcept { return e_; }

    /// |beta|
    unsigned degree() const noexcept;
    bool is_zero() const noexcept { return degree() == 0; }

    friend MultiIndex operator+(const MultiIndex& a, const MultiIndex& b);
    friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
    friend std::strong_ordering operator<=>(const MultiIndex&, const MultiIndex&) = default;

private:
    std::vector<unsigned> e_;
};

/// Integer weight vector, omega * beta.
using WeightVector = std::vector<long>;
long dot(const WeightVector& w, const MultiIndex& beta);
/// The weight (-1, 0, 1) on three variables.
WeightVector default_omega();

/// Comparator putting grlex-larger monomials first (x1 > x2 > ... > xn).
struct GrlexDescending {
    bool operator()(const MultiIndex& a, const MultiIndex& b) const;
};

class MonomialOrder {
public:
    enum class Kind { lex, grlex };

    /// `priority` lists 0-based variable indices from most to least significant.
    MonomialOrder(Kind kind, std::vector<std::size_t> priority);
    static MonomialOrder lex(std::size_t n);
    static MonomialOrder grlex(std::size_t n);

    Kind kind() const noexcept { return kind_; }
    const std::vector<std::size_t>& priority() const noexcept { return priority_; }

    std::strong_ordering compare(const MultiIndex& a, const MultiIndex& b) const;
    bool greater(const MultiIndex& a, const MultiIndex& b) const { return compare(a, b) > 0; }

    /// e.g. `lex:1,2,3` (1-based variable indices).
    std::string to_string() const;

private:
    Kind kind_;
    std::vector<std::size_t> priority_;
};

/// Ambient ring K[x1..xn] with a total-degree cap on every polynomial built in it.
struct Ring {
    std::size_t n = 3;
    Field field = Field::rationals();
    unsigned cap = kDefaultPolynomialCap;

    friend bool operator==(const Ring& a, const Ring& b) noexcept
    {
        return a.n == b.n && a.field == b.field && a.cap == b.cap;
    }
};

class Polynomial {
public:
    using TermMap = std::map<MultiIndex, Scalar, GrlexDescending>;

    explicit Polynomial(Ring ring);
    static Polynomial constant(Ring ring, const Scalar& c);
    static Polynomial monomial(Ring ring, const MultiIndex& beta);
    static Polynomial monomial(Ring ring, const MultiIndex& beta, const Scalar& c);
    /// x_{i+1}
    static Polynomial variable(Ring ring, std::size_t i);
    /// sum_i coeffs[i] x_{i+1}
    static Polynomial linear_form(Ring ring, std::span<const Scalar> coeffs);

    const Ring& ring() const noexcept { return ring_; }
    std::size_t nvars() const noexcept { return ring_.n; }
    Field field() const noexcept { return ring_.field; }
    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    Scalar coefficient(const MultiIndex& beta) const;
    /// Accumulates c X^beta; zero results are erased. Throws DegreeCapExceeded above the ring cap.
    void add_term(const MultiIndex& beta, const Scalar& c);

    /// Total degree; -1 for the zero polynomial.
    int degree() const noexcept;
    bool is_homogeneous() const noexcept;

    Polynomial scaled(const Scalar& c) const;
    Polynomial pow(unsigned k) const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
    friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
    friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
    friend bool operator==(const Polynomial& lhs, const Polynomial& rhs);

private:
    void check_compatible(const Polynomial& other) const;

    Ring ring_;
    TermMap terms_;
};

/// f split by total degree; empty for f = 0.
std::map<unsigned, Polynomial> homogeneous_components(const Polynomial& f);

/// The order-maximal monomial with its coefficient. Throws PreconditionError for f = 0.
std::pair<MultiIndex, Scalar> leading_term(const Polynomial& f, const MonomialOrder& order);

/// max omega*beta over the support; std::nullopt stands for -infinity (f = 0).
std::optional<long> deg_omega(const Polynomial& f, const WeightVector& omega);

/// Image of f under the algebra endomorphism x_j -> sum_i x_i M(i, j), i.e. X -> X M.
/// Composition: substitute_linear(substitute_linear(f, M), N) == substitute_linear(f, N * M).
Polynomial substitute_linear(const Polynomial& f, const Matrix& m);

/// All monomials of degree d in n variables, grlex-descending (x1^d first).
std::vector<MultiIndex> graded_basis(std::size_t n, unsigned d);
/// dim R_d = C(d + n - 1, n - 1).
std::size_t graded_dimension(std::size_t n, unsigned d);

/// Coordinates of a homogeneous polynomial in graded_basis(n, d); other degrees are rejected.
Vector to_coordinates(const Polynomial& f, unsigned d, const std::vector<MultiIndex>& basis);
Polynomial from_coordinates(Ring ring, std::span<const Scalar> coords, const std::vector<MultiIndex>& basis);

/// Monomial text, e.g. `x1^2*x3`; `1` for the empty monomial.
std::string monomial_string(const MultiIndex& beta);
/// Canonical text form: grlex-descending terms, e.g. `x1^2*x2 - 1/2*x3`.
std::string to_string(const Polynomial& f);
std::ostream& operator<<(std::ostream& os, const Polynomial& f);

}  // namespace mzlab
