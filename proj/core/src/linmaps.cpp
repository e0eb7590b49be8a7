#include "mzlab/linmaps.hpp"

#include "mzlab/error.hpp"

#include <algorithm>
#include <random>
#include <map>

namespace mzlab {

std::string to_string(MapKind kind)
{
    switch (kind) {
    case MapKind::derivation:
        return "derivation";
    case MapKind::endomorphism:
        return "endo";
    case MapKind::ederivation:
        return "ederivation";
    }
    return "?";
}

LinearMapSpec::LinearMapSpec(MapKind kind, Matrix matrix) : kind_(kind), matrix_(std::move(matrix))
{
    if (!matrix_.is_square())
        throw DimensionMismatch("linear map matrix must be square");
}

Polynomial LinearMapSpec::generator_image(const Ring& ring, std::size_t j) const
{
    return Polynomial::linear_form(ring, matrix_.column(j));
}

Field CanonicalCase::field() const
{
    if (params.empty())
        throw PreconditionError("canonical case has no parameters");
    return params.front().field();
}

std::vector<Scalar> CanonicalCase::alpha() const
{
    switch (family) {
    case Family::diag:
        return params;
    case Family::jordan2: {
        std::vector<Scalar> a = params;
        a.push_back(params.back());
        return a;
    }
    default:
        throw PreconditionError("alpha is defined for diag and jordan2 cases only");
    }
}

std::string case_name(const CanonicalCase& c)
{
    std::string base;
    switch (c.family) {
    case Family::diag:
        base = "diag";
        break;
    case Family::jordan2:
        base = "jordan2";
        break;
    case Family::jordan3:
        base = "jordan3";
        break;
    case Family::phi_a:
        return c.kind == MapKind::endomorphism ? "phi-a-endo" : "phi-a";
    }
    switch (c.kind) {
    case MapKind::derivation:
        return base + "-deriv";
    case MapKind::ederivation:
        return base + "-ederiv";
    case MapKind::endomorphism:
        return base + "-endo";
    }
    return base;
}

std::optional<CanonicalCase> case_from_name(const std::string& name, std::size_t n)
{
    static const std::map<std::string, std::pair<Family, MapKind>> names = {
        {"diag-deriv", {Family::diag, MapKind::derivation}},
        {"diag-ederiv", {Family::diag, MapKind::ederivation}},
        {"diag-endo", {Family::diag, MapKind::endomorphism}},
        {"jordan2-deriv", {Family::jordan2, MapKind::derivation}},
        {"jordan2-ederiv", {Family::jordan2, MapKind::ederivation}},
        {"jordan2-endo", {Family::jordan2, MapKind::endomorphism}},
        {"jordan3-deriv", {Family::jordan3, MapKind::derivation}},
        {"jordan3-ederiv", {Family::jordan3, MapKind::ederivation}},
        {"jordan3-endo", {Family::jordan3, MapKind::endomorphism}},
        {"phi-a", {Family::phi_a, MapKind::ederivation}},
        {"phi-a-endo", {Family::phi_a, MapKind::endomorphism}},
    };
    auto it = names.find(name);
    if (it == names.end())
        return std::nullopt;
    CanonicalCase c;
    c.family = it->second.first;
    c.kind = it->second.second;
    c.n = n;
    return c;
}

ConjugationMap::ConjugationMap(Matrix sigma) : sigma_(std::move(sigma)), inverse_(sigma_.field(), 0, 0)
{
    if (!sigma_.is_square())
        throw DimensionMismatch("conjugation matrix must be square");
    inverse_ = sigma_.inverse();
}

Polynomial derivation_apply(const LinearMapSpec& spec, const Polynomial& f)
{
    if (spec.kind() != MapKind::derivation)
        throw PreconditionError("derivation_apply needs a derivation, got " + to_string(spec.kind()));
    const std::size_t n = f.nvars();
    if (spec.n() != n)
        throw DimensionMismatch("map and polynomial have different variable counts");
    const Matrix& a = spec.matrix();
    Polynomial out(f.ring());
    for (const auto& [beta, c] : f.terms())
        for (std::size_t j = 0; j < n; ++j) {
            if (beta[j] == 0)
                continue;
            const Scalar cj = c.scaled(Rational(beta[j]));
            MultiIndex base = beta;
            --base[j];
            for (std::size_t i = 0; i < n; ++i) {
                if (a(i, j).is_zero())
                    continue;
                MultiIndex target = base;
                ++target[i];
                out.add_term(target, cj * a(i, j));
            }
        }
    return out;
}

Polynomial endomorphism_apply(const LinearMapSpec& spec, const Polynomial& f)
{
    if (spec.kind() == MapKind::derivation)
        throw PreconditionError("endomorphism_apply needs an endomorphism matrix, got a derivation");
    return substitute_linear(f, spec.matrix());
}

Polynomial ederivation_apply(const LinearMapSpec& spec, const Polynomial& f)
{
    if (spec.kind() != MapKind::ederivation)
        throw PreconditionError("ederivation_apply needs an E-derivation, got " + to_string(spec.kind()));
    return f - substitute_linear(f, spec.matrix());
}

Polynomial apply(const LinearMapSpec& spec, const Polynomial& f)
{
    switch (spec.kind()) {
    case MapKind::derivation:
        return derivation_apply(spec, f);
    case MapKind::endomorphism:
        return endomorphism_apply(spec, f);
    case MapKind::ederivation:
        return ederivation_apply(spec, f);
    }
    throw PreconditionError("unknown map kind");
}

std::optional<unsigned> is_nilpotent(const Matrix& a)
{
    if (!a.is_square())
        throw DimensionMismatch("nilpotency test needs a square matrix");
    Matrix p = a;
    for (unsigned k = 1; k <= std::max<std::size_t>(a.rows(), 1); ++k) {
        if (p.is_zero())
            return k;
        p = p * a;
    }
    return std::nullopt;
}

LinearMapSpec exp_derivation(const LinearMapSpec& spec)
{
    if (spec.kind() != MapKind::derivation)
        throw PreconditionError("exp_derivation needs a derivation");
    auto index = is_nilpotent(spec.matrix());
    if (!index)
        throw PreconditionError("exp_derivation needs a nilpotent matrix; the series does not terminate");
    const Field k = spec.field();
    Matrix sum = Matrix::identity(k, spec.n());
    Matrix term = sum;
    Rational factorial = 1;
    for (unsigned i = 1; i < *index; ++i) {
        term = term * spec.matrix();
        factorial *= i;
        sum = sum + term.scaled(k.from_rational(1 / factorial));
    }
    return {MapKind::endomorphism, sum};
}

LinearMapSpec conjugate(const ConjugationMap& sigma, const LinearMapSpec& spec)
{
    if (sigma.matrix().rows() != spec.n())
        throw DimensionMismatch("conjugation and map sizes differ");
    return {spec.kind(), sigma.matrix() * spec.matrix() * sigma.inverse_matrix()};
}

Matrix phi_a_matrix(const Scalar& a)
{
    const Field k = a.field();
    Matrix m(k, 3, 3);
    m(0, 0) = a;
    m(0, 1) = a;
    m(1, 1) = a;
    m(0, 2) = a.scaled(Rational(-1, 2));
    m(1, 2) = -a;
    m(2, 2) = a;
    return m;
}

LinearMapSpec delta_a(const Scalar& a)
{
    return {MapKind::ederivation, phi_a_matrix(a)};
}

LinearMapSpec standard_nilpotent_derivation(Field field)
{
    Matrix m(field, 3, 3);
    m(0, 1) = field.one();
    m(1, 2) = -field.one();
    return {MapKind::derivation, m};
}

LinearMapSpec canonical(const CanonicalCase& c)
{
    const std::size_t n = c.n;
    auto need = [&](std::size_t count) {
        if (c.params.size() != count)
            throw PreconditionError(case_name(c) + " needs " + std::to_string(count) + " parameter(s), got " +
                                    std::to_string(c.params.size()));
    };
    if (n == 0)
        throw PreconditionError("canonical case needs n >= 1");
    Matrix m(c.field(), n, n);
    switch (c.family) {
    case Family::diag:
        need(n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = c.params[i];
        break;
    case Family::jordan2:
        if (n < 2)
            throw PreconditionError("jordan2 needs n >= 2");
        need(n - 1);
        for (std::size_t i = 0; i + 1 < n; ++i)
            m(i, i) = c.params[i];
        m(n - 1, n - 1) = c.params[n - 2];
        m(n - 1, n - 2) = c.field().one();
        break;
    case Family::jordan3:
        need(1);
        for (std::size_t i = 0; i < n; ++i) {
            m(i, i) = c.params[0];
            if (i + 1 < n)
                m(i + 1, i) = c.field().one();
        }
        break;
    case Family::phi_a:
        need(1);
        if (n != 3)
            throw PreconditionError("phi_a is defined on three variables");
        if (c.kind == MapKind::derivation)
            throw PreconditionError("phi_a defines an endomorphism or E-derivation, not a derivation");
        m = phi_a_matrix(c.params[0]);
        break;
    }
    for (const auto& p : c.params)
        if (!(p.field() == c.field()))
            throw FieldMismatch("canonical case parameters from different fields");
    return {c.kind, m};
}

Matrix similarity_solve(const Matrix& a, const Matrix& j)
{
    if (!a.is_square() || a.rows() != j.rows() || !j.is_square())
        throw DimensionMismatch("similarity_solve needs square matrices of equal size");
    const std::size_t n = a.rows();
    const Field k = a.field();
    // unknown s_{pq} at index p*n + q; equation (S J - A S)_{il} = 0 at row i*n + l
    Matrix system(k, n * n, n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < n; ++l) {
            const std::size_t row = i * n + l;
            for (std::size_t q = 0; q < n; ++q) {
                system(row, i * n + q) += j(q, l);
                system(row, q * n + l) -= a(i, q);
            }
        }
    auto basis = system.nullspace();
    auto to_matrix = [&](const Vector& v) {
        Matrix s(k, n, n);
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = 0; q < n; ++q)
                s(p, q) = v[p * n + q];
        return s;
    };
    for (const auto& v : basis) {
        Matrix s = to_matrix(v);
        if (!s.determinant().is_zero())
            return s;
    }
    // det of a generic combination is a nonzero polynomial when an invertible S exists;
    // random small integer coefficients hit a non-root with probability >= 1 - n/101 per try
    std::mt19937 rng(0x5eed);
    std::uniform_int_distribution<long> coeff(-50, 50);
    for (int attempt = 0; attempt < 64 && !basis.empty(); ++attempt) {
        Vector v = zero_vector(k, n * n);
        for (const auto& b : basis) {
            const Scalar w = k.from_int(coeff(rng));
            for (std::size_t i = 0; i < v.size(); ++i)
                v[i] += w * b[i];
        }
        Matrix s = to_matrix(v);
        if (!s.determinant().is_zero())
            return s;
    }
    throw PreconditionError("matrices are not similar");
}

std::vector<Scalar> characteristic_polynomial(const Matrix& a)
{
    if (!a.is_square())
        throw DimensionMismatch("characteristic polynomial of a non-square matrix");
    // Faddeev-LeVerrier
    const std::size_t n = a.rows();
    const Field k = a.field();
    std::vector<Scalar> c(n + 1, k.zero());
    c[n] = k.one();
    Matrix m(k, n, n);
    const Matrix id = Matrix::identity(k, n);
    for (std::size_t step = 1; step <= n; ++step) {
        m = a * m + id.scaled(c[n - step + 1]);
        Matrix am = a * m;
        Scalar trace = k.zero();
        for (std::size_t i = 0; i < n; ++i)
            trace += am(i, i);
        c[n - step] = -trace.scaled(Rational(1, static_cast<long>(step)));
    }
    return c;
}

namespace {

std::vector<Integer> divisors(Integer v)
{
    v = abs(v);
    std::vector<Integer> out;
    for (Integer d = 1; d * d <= v; ++d)
        if (v % d == 0) {
            out.push_back(d);
            if (d * d != v)
                out.push_back(v / d);
        }
    return out;
}

// Rational roots with multiplicity of a rational polynomial (lowest degree first).
std::vector<Rational> rational_roots(std::vector<Rational> p)
{
    std::vector<Rational> roots;
    while (p.size() > 1 && p.back() == 0)
        p.pop_back();
    while (p.size() > 1 && p.front() == 0) {
        roots.emplace_back(0);
        p.erase(p.begin());
    }
    auto eval = [](const std::vector<Rational>& q, const Rational& x) {
        Rational r = 0;
        for (auto it = q.rbegin(); it != q.rend(); ++it)
            r = r * x + *it;
        return r;
    };
    auto deflate = [](const std::vector<Rational>& q, const Rational& x) {
        // synthetic division by (t - x)
        std::vector<Rational> out(q.size() - 1);
        Rational carry = 0;
        for (std::size_t i = q.size(); i-- > 1;) {
            carry = carry * x + q[i];
            out[i - 1] = carry;
        }
        return out;
    };
    bool progress = true;
    while (p.size() > 1 && progress) {
        progress = false;
        Integer lcm = 1;
        for (const auto& c : p)
            lcm = lcm * c.get_den() / gcd(lcm, c.get_den());
        Integer lead = Rational(p.back() * lcm).get_num();
        Integer constant = Rational(p.front() * lcm).get_num();
        for (const auto& num : divisors(constant)) {
            for (const auto& den : divisors(lead)) {
                for (int sign : {1, -1}) {
                    Rational x(num * sign, den);
                    x.canonicalize();
                    if (eval(p, x) == 0) {
                        roots.push_back(x);
                        p = deflate(p, x);
                        progress = true;
                        break;
                    }
                }
                if (progress)
                    break;
            }
            if (progress)
                break;
        }
    }
    if (p.size() > 1)
        throw PreconditionError("characteristic polynomial has non-rational roots");
    return roots;
}

}  // namespace

Jordanization jordanize(const LinearMapSpec& spec)
{
    const Matrix& a = spec.matrix();
    const std::size_t n = a.rows();
    if (n == 0 || n > 3)
        throw PreconditionError("jordanize supports 1 <= n <= 3");
    const Field k = a.field();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!a(i, j).is_rational())
                throw PreconditionError("jordanize needs a rational matrix");
    std::vector<Rational> cp;
    for (const auto& c : characteristic_polynomial(a))
        cp.push_back(c.rational_value());
    auto roots = rational_roots(cp);

    // distinct eigenvalues in order of discovery with algebraic multiplicity
    std::vector<std::pair<Rational, unsigned>> eig;
    for (const auto& r : roots) {
        auto it = std::find_if(eig.begin(), eig.end(), [&](const auto& e) { return e.first == r; });
        if (it == eig.end())
            eig.emplace_back(r, 1);
        else
            ++it->second;
    }
    const Matrix id = Matrix::identity(k, n);
    CanonicalCase form;
    form.kind = spec.kind();
    form.n = n;
    std::vector<Scalar> singles;
    std::optional<Scalar> block2, block3;
    for (const auto& [lambda, mult] : eig) {
        const Scalar l = k.from_rational(lambda);
        const std::size_t geometric = n - (a - id.scaled(l)).rank();
        if (geometric == mult) {
            for (unsigned i = 0; i < mult; ++i)
                singles.push_back(l);
        } else if (mult == 2 || (mult == 3 && geometric == 2)) {
            block2 = l;
            if (mult == 3)
                singles.push_back(l);
        } else {
            block3 = l;
        }
    }
    if (block3) {
        form.family = Family::jordan3;
        form.params = {*block3};
    } else if (block2) {
        form.family = Family::jordan2;
        form.params = singles;
        form.params.push_back(*block2);
    } else {
        form.family = Family::diag;
        form.params = singles;
    }
    Matrix j = canonical(form).matrix();
    return {form, ConjugationMap(similarity_solve(a, j))};
}

}  // namespace mzlab
