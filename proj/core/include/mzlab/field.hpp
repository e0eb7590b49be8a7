#pragma once

// Exact arithmetic in the cyclotomic field Q(zeta_m).
//
// A scalar is stored as its coordinate vector in the power basis
// 1, z, ..., z^(phi(m)-1), always reduced modulo the cyclotomic polynomial,
// so two scalars are equal exactly when their coordinate vectors are.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace mzlab {

using Rational = mpq_class;
using Integer = mpz_class;

/// Coefficients (lowest degree first) of the m-th cyclotomic polynomial.
/// Throws PreconditionError for m = 0.
std::vector<Integer> cyclotomic_poly(unsigned m);

/// Immutable description of Q(zeta_m). Instances are interned; obtain them through Field.
class FieldConfig {
public:
    explicit FieldConfig(unsigned m);

    unsigned conductor() const noexcept { return m_; }
    /// Euler phi of the conductor; the degree of the extension.
    unsigned degree() const noexcept { return phi_; }
    /// Monic modulus, lowest degree first, length degree() + 1.
    const std::vector<Rational>& modulus() const noexcept { return modulus_; }
    /// z^k reduced to the power basis, for degree() <= k <= 2*degree() - 2.
    const std::vector<Rational>& high_power(unsigned k) const { return high_powers_.at(k - phi_); }

private:
    unsigned m_;
    unsigned phi_;
    std::vector<Rational> modulus_;
    std::vector<std::vector<Rational>> high_powers_;
};

class Scalar;

/// Lightweight handle on an interned FieldConfig. Cheap to copy; compares by identity.
class Field {
public:
    /// Q(zeta_m); m = 1 gives Q.
    static Field cyclotomic(unsigned m);
    static Field rationals() { return cyclotomic(1); }

    unsigned conductor() const noexcept { return cfg_->conductor(); }
    unsigned degree() const noexcept { return cfg_->degree(); }
    const FieldConfig& config() const noexcept { return *cfg_; }

    Scalar zero() const;
    Scalar one() const;
    Scalar from_int(long v) const;
    Scalar from_rational(const Rational& r) const;
    /// The generator zeta_m. Throws PreconditionError when m = 1, where no symbol is bound.
    Scalar zeta() const;
    /// zeta_m^k for any integer k (negative allowed). Valid for m = 1 as well (gives 1).
    Scalar zeta_pow(long k) const;

    friend bool operator==(const Field& a, const Field& b) noexcept { return a.cfg_ == b.cfg_; }

private:
    explicit Field(const FieldConfig* cfg) : cfg_(cfg) {}
    const FieldConfig* cfg_;
};

/// Element of Q(zeta_m). Immutable value semantics; all operations return canonical results.
class Scalar {
public:
    /// Zero of Q.
    Scalar();
    explicit Scalar(Field field);
    Scalar(Field field, const Rational& value);
    /// Reduces an arbitrary-length coefficient list (sum c_i z^i) modulo the cyclotomic polynomial.
    static Scalar from_coeffs(Field field, std::span<const Rational> coeffs);

    Field field() const noexcept { return field_; }
    std::span<const Rational> coeffs() const noexcept { return coeffs_; }

    bool is_zero() const noexcept;
    bool is_one() const noexcept;
    /// True when the value lies in Q.
    bool is_rational() const noexcept;
    /// The rational value; throws PreconditionError unless is_rational().
    const Rational& rational_value() const;

    Scalar inverse() const;
    Scalar pow(long exponent) const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& rhs);
    Scalar& operator-=(const Scalar& rhs);
    Scalar& operator*=(const Scalar& rhs);
    Scalar& operator/=(const Scalar& rhs);

    friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
    friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
    friend Scalar operator*(const Scalar& lhs, const Scalar& rhs);
    friend Scalar operator/(const Scalar& lhs, const Scalar& rhs) { return lhs * rhs.inverse(); }
    friend bool operator==(const Scalar& lhs, const Scalar& rhs);

    /// Multiply by a rational without leaving the field.
    Scalar scaled(const Rational& r) const;

private:
    void check_same_field(const Scalar& other) const;

    Field field_;
    std::vector<Rational> coeffs_;
};

/// Least j >= 1 with a^j = 1, searched over 1..2m; std::nullopt if a is not a root of unity.
/// Throws PreconditionError for a = 0.
std::optional<unsigned> root_of_unity_order(const Scalar& a);

/// Scalar text syntax: rational coefficients on powers of `z`, lowest power first, e.g. `-1/2 + z^2`.
std::string to_string(const Scalar& s);
/// Text of a rational: `p` or `p/q`.
std::string to_string(const Rational& r);
std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// True when the printed form of `s` needs parentheses when used as a factor.
bool is_compound(const Scalar& s);

}  // namespace mzlab
