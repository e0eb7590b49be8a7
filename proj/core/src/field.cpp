#include "mzlab/field.hpp"

#include "mzlab/error.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>

namespace mzlab {

namespace {

using UPoly = std::vector<Rational>;

void trim(UPoly& p)
{
    while (!p.empty() && p.back() == 0)
        p.pop_back();
}

// Quotient and remainder of a by b over Q; b must be nonzero after trimming.
std::pair<UPoly, UPoly> divmod(UPoly a, UPoly b)
{
    trim(a);
    trim(b);
    if (b.empty())
        throw DivisionByZero();
    if (a.size() < b.size())
        return {UPoly{}, a};
    UPoly q(a.size() - b.size() + 1);
    const Rational& lead = b.back();
    for (std::size_t shift = q.size(); shift-- > 0;) {
        Rational c = a[shift + b.size() - 1] / lead;
        q[shift] = c;
        if (c != 0)
            for (std::size_t j = 0; j < b.size(); ++j)
                a[shift + j] -= c * b[j];
    }
    a.resize(b.size() - 1);
    trim(a);
    trim(q);
    return {q, a};
}

UPoly mul(const UPoly& a, const UPoly& b)
{
    if (a.empty() || b.empty())
        return {};
    UPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0)
            for (std::size_t j = 0; j < b.size(); ++j)
                r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

UPoly sub(UPoly a, const UPoly& b)
{
    if (a.size() < b.size())
        a.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i)
        a[i] -= b[i];
    trim(a);
    return a;
}

std::vector<Integer> cyclotomic_uncached(unsigned m, std::map<unsigned, std::vector<Integer>>& memo);

const std::vector<Integer>& cyclotomic_memo(unsigned m, std::map<unsigned, std::vector<Integer>>& memo)
{
    auto it = memo.find(m);
    if (it == memo.end())
        it = memo.emplace(m, cyclotomic_uncached(m, memo)).first;
    return it->second;
}

std::vector<Integer> cyclotomic_uncached(unsigned m, std::map<unsigned, std::vector<Integer>>& memo)
{
    // x^m - 1 divided exactly by every Phi_d with d | m, d < m
    UPoly num(m + 1);
    num[0] = -1;
    num[m] = 1;
    for (unsigned d = 1; d < m; ++d) {
        if (m % d != 0)
            continue;
        const auto& phi_d = cyclotomic_memo(d, memo);
        UPoly den(phi_d.begin(), phi_d.end());
        auto [q, r] = divmod(num, den);
        if (!r.empty())
            throw Error("inexact cyclotomic division");
        num = std::move(q);
    }
    std::vector<Integer> out;
    out.reserve(num.size());
    for (auto& c : num) {
        if (c.get_den() != 1)
            throw Error("non-integral cyclotomic coefficient");
        out.push_back(c.get_num());
    }
    return out;
}

}  // namespace

std::vector<Integer> cyclotomic_poly(unsigned m)
{
    if (m == 0)
        throw PreconditionError("cyclotomic_poly: conductor must be >= 1");
    static std::mutex mu;
    static std::map<unsigned, std::vector<Integer>> memo;
    std::lock_guard lock(mu);
    return cyclotomic_memo(m, memo);
}

FieldConfig::FieldConfig(unsigned m) : m_(m)
{
    auto phi = cyclotomic_poly(m);
    phi_ = static_cast<unsigned>(phi.size() - 1);
    modulus_.assign(phi.begin(), phi.end());
    // z^phi = -(c_0 + c_1 z + ... + c_{phi-1} z^{phi-1}); higher powers by shifting
    std::vector<Rational> cur(phi_);
    for (unsigned i = 0; i < phi_; ++i)
        cur[i] = -modulus_[i];
    for (unsigned k = phi_; k + 1 < 2 * phi_ || k == phi_; ++k) {
        high_powers_.push_back(cur);
        std::vector<Rational> next(phi_);
        for (unsigned i = 0; i + 1 < phi_; ++i)
            next[i + 1] = cur[i];
        const Rational top = cur[phi_ - 1];
        if (top != 0)
            for (unsigned i = 0; i < phi_; ++i)
                next[i] -= top * modulus_[i];
        cur = std::move(next);
    }
}

Field Field::cyclotomic(unsigned m)
{
    if (m == 0)
        throw PreconditionError("field conductor must be >= 1");
    static std::mutex mu;
    static std::map<unsigned, std::unique_ptr<FieldConfig>> registry;
    std::lock_guard lock(mu);
    auto& slot = registry[m];
    if (!slot)
        slot = std::make_unique<FieldConfig>(m);
    return Field(slot.get());
}

Scalar Field::zero() const { return Scalar(*this); }
Scalar Field::one() const { return Scalar(*this, Rational(1)); }
Scalar Field::from_int(long v) const { return Scalar(*this, Rational(v)); }
Scalar Field::from_rational(const Rational& r) const { return Scalar(*this, r); }

Scalar Field::zeta() const
{
    if (conductor() == 1)
        throw PreconditionError("the symbol z is unbound when m = 1");
    return zeta_pow(1);
}

Scalar Field::zeta_pow(long k) const
{
    const long m = conductor();
    long e = ((k % m) + m) % m;
    std::vector<Rational> c(static_cast<std::size_t>(e) + 1);
    c[static_cast<std::size_t>(e)] = 1;
    return Scalar::from_coeffs(*this, c);
}

Scalar::Scalar() : Scalar(Field::rationals()) {}

Scalar::Scalar(Field field) : field_(field), coeffs_(field.degree()) {}

Scalar::Scalar(Field field, const Rational& value) : field_(field), coeffs_(field.degree())
{
    coeffs_[0] = value;
}

Scalar Scalar::from_coeffs(Field field, std::span<const Rational> coeffs)
{
    Scalar out(field);
    const unsigned phi = field.degree();
    const auto& cfg = field.config();
    UPoly rest;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] == 0)
            continue;
        if (i < phi)
            out.coeffs_[i] += coeffs[i];
        else if (i <= 2 * phi - 2 && phi > 1)
            for (unsigned j = 0; j < phi; ++j)
                out.coeffs_[j] += coeffs[i] * cfg.high_power(static_cast<unsigned>(i))[j];
        else {
            if (rest.size() <= i)
                rest.resize(i + 1);
            rest[i] += coeffs[i];
        }
    }
    if (!rest.empty()) {
        auto [q, r] = divmod(rest, cfg.modulus());
        for (std::size_t j = 0; j < r.size(); ++j)
            out.coeffs_[j] += r[j];
    }
    return out;
}

bool Scalar::is_zero() const noexcept
{
    for (const auto& c : coeffs_)
        if (c != 0)
            return false;
    return true;
}

bool Scalar::is_rational() const noexcept
{
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0)
            return false;
    return true;
}

bool Scalar::is_one() const noexcept { return is_rational() && coeffs_[0] == 1; }

const Rational& Scalar::rational_value() const
{
    if (!is_rational())
        throw PreconditionError("scalar " + to_string(*this) + " is not rational");
    return coeffs_[0];
}

void Scalar::check_same_field(const Scalar& other) const
{
    if (!(field_ == other.field_))
        throw FieldMismatch("scalars from Q(zeta_" + std::to_string(field_.conductor()) + ") and Q(zeta_" +
                            std::to_string(other.field_.conductor()) + ")");
}

Scalar Scalar::operator-() const
{
    Scalar out(*this);
    for (auto& c : out.coeffs_)
        c = -c;
    return out;
}

Scalar& Scalar::operator+=(const Scalar& rhs)
{
    check_same_field(rhs);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        coeffs_[i] += rhs.coeffs_[i];
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs)
{
    check_same_field(rhs);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        coeffs_[i] -= rhs.coeffs_[i];
    return *this;
}

Scalar operator*(const Scalar& lhs, const Scalar& rhs)
{
    lhs.check_same_field(rhs);
    const unsigned phi = lhs.field_.degree();
    if (phi == 1)
        return Scalar(lhs.field_, lhs.coeffs_[0] * rhs.coeffs_[0]);
    std::vector<Rational> prod(2 * phi - 1);
    for (unsigned i = 0; i < phi; ++i) {
        if (lhs.coeffs_[i] == 0)
            continue;
        for (unsigned j = 0; j < phi; ++j)
            if (rhs.coeffs_[j] != 0)
                prod[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
    return Scalar::from_coeffs(lhs.field_, prod);
}

Scalar& Scalar::operator*=(const Scalar& rhs) { return *this = *this * rhs; }
Scalar& Scalar::operator/=(const Scalar& rhs) { return *this = *this / rhs; }

bool operator==(const Scalar& lhs, const Scalar& rhs)
{
    lhs.check_same_field(rhs);
    return lhs.coeffs_ == rhs.coeffs_;
}

Scalar Scalar::scaled(const Rational& r) const
{
    Scalar out(*this);
    for (auto& c : out.coeffs_)
        c *= r;
    return out;
}

Scalar Scalar::inverse() const
{
    if (is_zero())
        throw DivisionByZero();
    if (is_rational())
        return Scalar(field_, 1 / coeffs_[0]);
    // extended Euclid: track s with s*a = r (mod Phi_m)
    UPoly r0 = field_.config().modulus(), r1(coeffs_.begin(), coeffs_.end());
    UPoly s0, s1{Rational(1)};
    trim(r1);
    while (r1.size() > 1) {
        auto [q, r] = divmod(r0, r1);
        UPoly s = sub(s0, mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    // r1 is a nonzero constant since Phi_m is irreducible
    Rational c = r1.at(0);
    for (auto& v : s1)
        v /= c;
    return from_coeffs(field_, s1);
}

Scalar Scalar::pow(long exponent) const
{
    if (exponent < 0)
        return inverse().pow(-exponent);
    Scalar result = field_.one();
    Scalar base = *this;
    while (exponent > 0) {
        if (exponent & 1)
            result *= base;
        exponent >>= 1;
        if (exponent)
            base *= base;
    }
    return result;
}

std::optional<unsigned> root_of_unity_order(const Scalar& a)
{
    if (a.is_zero())
        throw PreconditionError("root_of_unity_order: zero has no multiplicative order");
    const unsigned bound = 2 * a.field().conductor();
    Scalar p = a;
    for (unsigned j = 1; j <= bound; ++j) {
        if (p.is_one())
            return j;
        p *= a;
    }
    return std::nullopt;
}

std::string to_string(const Rational& r)
{
    return r.get_str();
}

std::string to_string(const Scalar& s)
{
    std::ostringstream os;
    bool first = true;
    const auto c = s.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0)
            continue;
        Rational mag = abs(c[i]);
        const bool neg = c[i] < 0;
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        first = false;
        if (i == 0) {
            os << to_string(mag);
            continue;
        }
        if (mag != 1)
            os << to_string(mag) << '*';
        os << 'z';
        if (i > 1)
            os << '^' << i;
    }
    if (first)
        os << '0';
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s)
{
    return os << to_string(s);
}

bool is_compound(const Scalar& s)
{
    int nonzero = 0;
    for (const auto& c : s.coeffs())
        nonzero += (c != 0);
    return nonzero > 1;
}

}  // namespace mzlab
