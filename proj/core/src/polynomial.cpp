#include "mzlab/polynomial.hpp"

#include "mzlab/error.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace mzlab {

MultiIndex MultiIndex::unit(std::size_t n, std::size_t i)
{
    MultiIndex e(n);
    e.e_.at(i) = 1;
    return e;
}

unsigned MultiIndex::degree() const noexcept
{
    return std::accumulate(e_.begin(), e_.end(), 0u);
}

MultiIndex operator+(const MultiIndex& a, const MultiIndex& b)
{
    if (a.size() != b.size())
        throw DimensionMismatch("multi-index length mismatch");
    MultiIndex out(a);
    for (std::size_t i = 0; i < a.size(); ++i)
        out.e_[i] += b.e_[i];
    return out;
}

long dot(const WeightVector& w, const MultiIndex& beta)
{
    if (w.size() != beta.size())
        throw DimensionMismatch("weight vector length mismatch");
    long s = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
        s += w[i] * static_cast<long>(beta[i]);
    return s;
}

WeightVector default_omega()
{
    return {-1, 0, 1};
}

bool GrlexDescending::operator()(const MultiIndex& a, const MultiIndex& b) const
{
    const unsigned da = a.degree(), db = b.degree();
    if (da != db)
        return da > db;
    return a.exponents() > b.exponents();
}

MonomialOrder::MonomialOrder(Kind kind, std::vector<std::size_t> priority) : kind_(kind), priority_(std::move(priority))
{
    std::vector<std::size_t> sorted = priority_;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i)
        if (sorted[i] != i)
            throw PreconditionError("monomial order priority is not a permutation");
}

MonomialOrder MonomialOrder::lex(std::size_t n)
{
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    return {Kind::lex, p};
}

MonomialOrder MonomialOrder::grlex(std::size_t n)
{
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    return {Kind::grlex, p};
}

std::strong_ordering MonomialOrder::compare(const MultiIndex& a, const MultiIndex& b) const
{
    if (a.size() != priority_.size() || b.size() != priority_.size())
        throw DimensionMismatch("monomial order arity mismatch");
    if (kind_ == Kind::grlex) {
        auto c = a.degree() <=> b.degree();
        if (c != 0)
            return c;
    }
    for (auto v : priority_) {
        auto c = a[v] <=> b[v];
        if (c != 0)
            return c;
    }
    return std::strong_ordering::equal;
}

std::string MonomialOrder::to_string() const
{
    std::string s = kind_ == Kind::lex ? "lex:" : "grlex:";
    for (std::size_t i = 0; i < priority_.size(); ++i)
        s += (i ? "," : "") + std::to_string(priority_[i] + 1);
    return s;
}

Polynomial::Polynomial(Ring ring) : ring_(ring) {}

Polynomial Polynomial::constant(Ring ring, const Scalar& c)
{
    Polynomial p(ring);
    p.add_term(MultiIndex(ring.n), c);
    return p;
}

Polynomial Polynomial::monomial(Ring ring, const MultiIndex& beta)
{
    return monomial(ring, beta, ring.field.one());
}

Polynomial Polynomial::monomial(Ring ring, const MultiIndex& beta, const Scalar& c)
{
    Polynomial p(ring);
    p.add_term(beta, c);
    return p;
}

Polynomial Polynomial::variable(Ring ring, std::size_t i)
{
    if (i >= ring.n)
        throw DimensionMismatch("variable index out of range");
    return monomial(ring, MultiIndex::unit(ring.n, i));
}

Polynomial Polynomial::linear_form(Ring ring, std::span<const Scalar> coeffs)
{
    if (coeffs.size() != ring.n)
        throw DimensionMismatch("linear form length mismatch");
    Polynomial p(ring);
    for (std::size_t i = 0; i < ring.n; ++i)
        p.add_term(MultiIndex::unit(ring.n, i), coeffs[i]);
    return p;
}

Scalar Polynomial::coefficient(const MultiIndex& beta) const
{
    auto it = terms_.find(beta);
    return it == terms_.end() ? ring_.field.zero() : it->second;
}

void Polynomial::add_term(const MultiIndex& beta, const Scalar& c)
{
    if (beta.size() != ring_.n)
        throw DimensionMismatch("monomial has " + std::to_string(beta.size()) + " exponents, ring has " +
                                std::to_string(ring_.n) + " variables");
    if (!(c.field() == ring_.field))
        throw FieldMismatch("coefficient from a different field");
    if (c.is_zero())
        return;
    if (beta.degree() > ring_.cap)
        throw DegreeCapExceeded(beta.degree(), ring_.cap);
    auto [it, inserted] = terms_.try_emplace(beta, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

int Polynomial::degree() const noexcept
{
    return terms_.empty() ? -1 : static_cast<int>(terms_.begin()->first.degree());
}

bool Polynomial::is_homogeneous() const noexcept
{
    if (terms_.empty())
        return true;
    const unsigned d = terms_.begin()->first.degree();
    return terms_.rbegin()->first.degree() == d;
}

void Polynomial::check_compatible(const Polynomial& other) const
{
    if (ring_.n != other.ring_.n)
        throw DimensionMismatch("polynomials in " + std::to_string(ring_.n) + " and " + std::to_string(other.ring_.n) +
                                " variables");
    if (!(ring_.field == other.ring_.field))
        throw FieldMismatch("polynomials over different fields");
}

Polynomial Polynomial::scaled(const Scalar& c) const
{
    Polynomial out(ring_);
    if (c.is_zero())
        return out;
    for (const auto& [beta, a] : terms_)
        out.terms_.emplace_hint(out.terms_.end(), beta, a * c);
    return out;
}

Polynomial Polynomial::pow(unsigned k) const
{
    if (k > 0 && degree() > 0 && static_cast<unsigned long>(degree()) * k > ring_.cap)
        throw DegreeCapExceeded(static_cast<unsigned>(degree()) * k, ring_.cap);
    Polynomial result = constant(ring_, ring_.field.one());
    Polynomial base = *this;
    while (k > 0) {
        if (k & 1)
            result = result * base;
        k >>= 1;
        if (k)
            base = base * base;
    }
    return result;
}

Polynomial Polynomial::operator-() const
{
    Polynomial out(*this);
    for (auto& [beta, c] : out.terms_)
        c = -c;
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs)
{
    check_compatible(rhs);
    for (const auto& [beta, c] : rhs.terms_)
        add_term(beta, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs)
{
    check_compatible(rhs);
    for (const auto& [beta, c] : rhs.terms_)
        add_term(beta, -c);
    return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs)
{
    lhs.check_compatible(rhs);
    Polynomial out(lhs.ring_);
    if (lhs.is_zero() || rhs.is_zero())
        return out;
    const unsigned d = static_cast<unsigned>(lhs.degree() + rhs.degree());
    if (d > out.ring_.cap)
        throw DegreeCapExceeded(d, out.ring_.cap);
    for (const auto& [a, ca] : lhs.terms_)
        for (const auto& [b, cb] : rhs.terms_)
            out.add_term(a + b, ca * cb);
    return out;
}

bool operator==(const Polynomial& lhs, const Polynomial& rhs)
{
    if (lhs.ring_.n != rhs.ring_.n || !(lhs.ring_.field == rhs.ring_.field))
        return false;
    return lhs.terms_ == rhs.terms_;
}

std::map<unsigned, Polynomial> homogeneous_components(const Polynomial& f)
{
    std::map<unsigned, Polynomial> out;
    for (const auto& [beta, c] : f.terms()) {
        auto it = out.try_emplace(beta.degree(), f.ring()).first;
        it->second.add_term(beta, c);
    }
    return out;
}

std::pair<MultiIndex, Scalar> leading_term(const Polynomial& f, const MonomialOrder& order)
{
    if (f.is_zero())
        throw PreconditionError("leading term of the zero polynomial");
    auto best = f.terms().begin();
    for (auto it = std::next(best); it != f.terms().end(); ++it)
        if (order.greater(it->first, best->first))
            best = it;
    return {best->first, best->second};
}

std::optional<long> deg_omega(const Polynomial& f, const WeightVector& omega)
{
    std::optional<long> best;
    for (const auto& [beta, c] : f.terms()) {
        long w = dot(omega, beta);
        if (!best || w > *best)
            best = w;
    }
    return best;
}

Polynomial substitute_linear(const Polynomial& f, const Matrix& m)
{
    const std::size_t n = f.nvars();
    if (m.rows() != n || m.cols() != n)
        throw DimensionMismatch("substitution matrix must be " + std::to_string(n) + "x" + std::to_string(n));
    if (!(m.field() == f.field()))
        throw FieldMismatch("substitution matrix over a different field");
    const Ring ring = f.ring();
    // powers[j][k] = (column j of m as a linear form)^k, grown on demand
    std::vector<std::vector<Polynomial>> powers(n);
    for (std::size_t j = 0; j < n; ++j)
        powers[j].push_back(Polynomial::constant(ring, ring.field.one()));
    auto power = [&](std::size_t j, unsigned k) -> const Polynomial& {
        auto& pj = powers[j];
        if (pj.size() == 1 && k > 0)
            pj.push_back(Polynomial::linear_form(ring, m.column(j)));
        while (pj.size() <= k)
            pj.push_back(pj.back() * pj[1]);
        return pj[k];
    };
    Polynomial out(ring);
    for (const auto& [beta, c] : f.terms()) {
        Polynomial term = Polynomial::constant(ring, c);
        for (std::size_t j = 0; j < n; ++j)
            if (beta[j] > 0)
                term = term * power(j, beta[j]);
        out += term;
    }
    return out;
}

namespace {

void enumerate(std::size_t n, std::size_t pos, unsigned remaining, MultiIndex& cur, std::vector<MultiIndex>& out)
{
    if (pos + 1 == n) {
        cur[pos] = remaining;
        out.push_back(cur);
        return;
    }
    for (unsigned e = remaining + 1; e-- > 0;) {
        cur[pos] = e;
        enumerate(n, pos + 1, remaining - e, cur, out);
    }
}

}  // namespace

std::vector<MultiIndex> graded_basis(std::size_t n, unsigned d)
{
    std::vector<MultiIndex> out;
    if (n == 0) {
        if (d == 0)
            out.emplace_back(0);
        return out;
    }
    MultiIndex cur(n);
    enumerate(n, 0, d, cur, out);
    return out;
}

std::size_t graded_dimension(std::size_t n, unsigned d)
{
    if (n == 0)
        return d == 0 ? 1 : 0;
    // C(d + n - 1, n - 1)
    std::size_t k = n - 1, top = d + n - 1;
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i)
        r = r * (top - k + i) / i;
    return r;
}

Vector to_coordinates(const Polynomial& f, unsigned d, const std::vector<MultiIndex>& basis)
{
    Vector v = zero_vector(f.field(), basis.size());
    for (const auto& [beta, c] : f.terms()) {
        if (beta.degree() != d)
            throw PreconditionError("polynomial is not homogeneous of degree " + std::to_string(d));
        auto it = std::lower_bound(basis.begin(), basis.end(), beta, GrlexDescending{});
        if (it == basis.end() || !(*it == beta))
            throw PreconditionError("monomial missing from basis");
        v[static_cast<std::size_t>(it - basis.begin())] = c;
    }
    return v;
}

Polynomial from_coordinates(Ring ring, std::span<const Scalar> coords, const std::vector<MultiIndex>& basis)
{
    if (coords.size() != basis.size())
        throw DimensionMismatch("coordinate vector length mismatch");
    Polynomial p(ring);
    for (std::size_t i = 0; i < basis.size(); ++i)
        p.add_term(basis[i], coords[i]);
    return p;
}

std::string monomial_string(const MultiIndex& beta)
{
    std::string s;
    for (std::size_t i = 0; i < beta.size(); ++i) {
        if (beta[i] == 0)
            continue;
        if (!s.empty())
            s += '*';
        s += 'x' + std::to_string(i + 1);
        if (beta[i] > 1)
            s += '^' + std::to_string(beta[i]);
    }
    return s.empty() ? "1" : s;
}

std::string to_string(const Polynomial& f)
{
    if (f.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [beta, c] : f.terms()) {
        const bool constant_term = beta.is_zero();
        std::string body;
        bool negative = false;
        if (is_compound(c)) {
            body = (f.size() == 1 && constant_term) ? to_string(c) : "(" + to_string(c) + ")";
        } else {
            // single term r * z^k
            for (const auto& r : c.coeffs())
                if (r != 0)
                    negative = r < 0;
            Scalar mag = negative ? -c : c;
            if (!(mag.is_one() && !constant_term))
                body = to_string(mag);
        }
        if (!constant_term)
            body += (body.empty() ? "" : "*") + monomial_string(beta);
        if (first)
            os << (negative ? "-" : "") << body;
        else
            os << (negative ? " - " : " + ") << body;
        first = false;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& f)
{
    return os << to_string(f);
}

}  // namespace mzlab
