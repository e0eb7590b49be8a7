#include "mzlab/image_engine.hpp"

#include "mzlab/error.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <mutex>

namespace mzlab {

std::vector<Polynomial> monomial_images(const LinearMapSpec& spec, const Ring& ring,
                                        const std::vector<MultiIndex>& monomials)
{
    std::vector<Polynomial> out;
    out.reserve(monomials.size());
    if (spec.kind() == MapKind::derivation) {
        for (const auto& beta : monomials)
            out.push_back(derivation_apply(spec, Polynomial::monomial(ring, beta)));
        return out;
    }
    // X^beta -> prod_j L_j^beta_j with L_j the j-th column as a linear form; powers shared
    const std::size_t n = ring.n;
    std::vector<std::vector<Polynomial>> powers(n);
    for (std::size_t j = 0; j < n; ++j) {
        powers[j].push_back(Polynomial::constant(ring, ring.field.one()));
        powers[j].push_back(spec.generator_image(ring, j));
    }
    auto power = [&](std::size_t j, unsigned k) -> const Polynomial& {
        while (powers[j].size() <= k)
            powers[j].push_back(powers[j].back() * powers[j][1]);
        return powers[j][k];
    };
    for (const auto& beta : monomials) {
        Polynomial img = Polynomial::constant(ring, ring.field.one());
        for (std::size_t j = 0; j < n; ++j)
            if (beta[j] > 0)
                img = img * power(j, beta[j]);
        if (spec.kind() == MapKind::ederivation)
            img = Polynomial::monomial(ring, beta) - img;
        out.push_back(std::move(img));
    }
    return out;
}

GradedImage::GradedImage(const LinearMapSpec& spec, const Ring& ring, unsigned degree)
    : ring_(ring),
      degree_(degree),
      basis_(graded_basis(ring.n, degree)),
      matrix_(ring.field, basis_.size(), basis_.size()),
      image_(ring.field, basis_.size(), basis_.size()),
      kernel_(ring.field, basis_.size())
{
    if (spec.n() != ring.n)
        throw DimensionMismatch("map and ring have different variable counts");
    if (!(spec.field() == ring.field))
        throw FieldMismatch("map and ring over different fields");
    const auto images = monomial_images(spec, ring, basis_);
    const Field k = ring.field;
    for (std::size_t j = 0; j < basis_.size(); ++j) {
        Vector col = to_coordinates(images[j], degree, basis_);
        for (std::size_t i = 0; i < col.size(); ++i)
            matrix_(i, j) = col[i];
        Vector unit = zero_vector(k, basis_.size());
        unit[j] = k.one();
        if (auto relation = image_.insert(std::move(col), std::move(unit)))
            kernel_.insert(std::move(*relation));
    }
}

std::vector<Polynomial> GradedImage::image_basis() const
{
    std::vector<Polynomial> out;
    for (const auto& row : image_.rows())
        out.push_back(from_coordinates(ring_, row, basis_));
    return out;
}

GradedImage::Solution GradedImage::solve(Vector target) const
{
    auto red = image_.reduce(std::move(target));
    Solution s;
    s.member = is_zero(red.residual);
    s.residual = std::move(red.residual);
    s.preimage = kernel_.reduce(std::move(red.payload)).residual;
    return s;
}

std::optional<Polynomial> GradedImage::preimage(const Polynomial& f) const
{
    auto s = solve(to_coordinates(f, degree_, basis_));
    if (!s.member)
        return std::nullopt;
    return from_coordinates(ring_, s.preimage, basis_);
}

ImageEngine::ImageEngine(LinearMapSpec spec, unsigned degree_cap)
    : spec_(std::move(spec)),
      cap_(degree_cap),
      ring_{spec_.n(), spec_.field(), std::max(kDefaultPolynomialCap, degree_cap)}
{
}

std::shared_ptr<const GradedImage> ImageEngine::image(unsigned d) const
{
    if (d > cap_)
        throw DegreeCapExceeded(d, cap_);
    {
        std::shared_lock lock(mu_);
        auto it = cache_.find(d);
        if (it != cache_.end())
            return it->second;
    }
    auto built = std::make_shared<const GradedImage>(spec_, ring_, d);
    std::unique_lock lock(mu_);
    return cache_.try_emplace(d, std::move(built)).first->second;
}

void ImageEngine::prefetch(std::span<const unsigned> degrees) const
{
    std::vector<std::future<std::shared_ptr<const GradedImage>>> jobs;
    for (unsigned d : degrees) {
        if (d > cap_)
            throw DegreeCapExceeded(d, cap_);
        {
            std::shared_lock lock(mu_);
            if (cache_.count(d))
                continue;
        }
        jobs.push_back(std::async(std::launch::async, [this, d] { return image(d); }));
    }
    for (auto& j : jobs)
        j.get();
}

MembershipVerdict ImageEngine::member(const Polynomial& f) const
{
    if (f.nvars() != ring_.n)
        throw DimensionMismatch("polynomial and map have different variable counts");
    auto components = homogeneous_components(f);
    std::vector<unsigned> degrees;
    for (const auto& [d, part] : components) {
        if (d > cap_)
            throw DegreeCapExceeded(d, cap_);
        degrees.push_back(d);
    }
    if (degrees.size() > 1)
        prefetch(degrees);
    MembershipVerdict v;
    Polynomial witness(ring_);
    for (const auto& [d, part] : components) {
        auto img = image(d);
        auto s = img->solve(to_coordinates(part, d, img->basis_monomials()));
        if (!s.member) {
            v.failing_component = FailingComponent{d, from_coordinates(ring_, s.residual, img->basis_monomials())};
            return v;
        }
        witness += from_coordinates(ring_, s.preimage, img->basis_monomials());
    }
    v.member = true;
    v.witness = std::move(witness);
    return v;
}

GradedImage image_basis(const LinearMapSpec& spec, unsigned d, unsigned degree_cap)
{
    if (d > degree_cap)
        throw DegreeCapExceeded(d, degree_cap);
    Ring ring{spec.n(), spec.field(), std::max(kDefaultPolynomialCap, degree_cap)};
    return GradedImage(spec, ring, d);
}

MembershipVerdict member(const LinearMapSpec& spec, const Polynomial& f, unsigned degree_cap)
{
    return ImageEngine(spec, degree_cap).member(f);
}

Scalar alpha_power(std::span<const Scalar> alpha, const MultiIndex& beta)
{
    if (alpha.size() != beta.size())
        throw DimensionMismatch("alpha and beta lengths differ");
    Scalar r = alpha.front().field().one();
    for (std::size_t i = 0; i < alpha.size(); ++i)
        if (beta[i] > 0)
            r *= alpha[i].pow(beta[i]);
    return r;
}

Scalar alpha_dot(std::span<const Scalar> alpha, const MultiIndex& beta)
{
    if (alpha.size() != beta.size())
        throw DimensionMismatch("alpha and beta lengths differ");
    Scalar r = alpha.front().field().zero();
    for (std::size_t i = 0; i < alpha.size(); ++i)
        if (beta[i] > 0)
            r += alpha[i].scaled(Rational(beta[i]));
    return r;
}

namespace {

// Closed form for a single Jordan block E-derivation or delta_a: X^beta is a member whenever
// 1 - a^|beta| != 0, since the leading coefficient under a suitable order is 1 - a^|beta|.
std::optional<bool> unipotent_block_rule(const Scalar& a, const MultiIndex& beta)
{
    if (a.is_zero())
        return true;
    auto order = root_of_unity_order(a);
    if (!order)
        return true;
    if (beta.degree() % *order != 0)
        return true;
    return std::nullopt;
}

}  // namespace

std::optional<bool> monomial_member_closed_form(const CanonicalCase& c, const MultiIndex& beta)
{
    if (beta.is_zero())
        throw PreconditionError("closed form is stated for nonconstant monomials");
    if (beta.size() != c.n)
        throw DimensionMismatch("monomial arity does not match the case");
    const std::size_t n = c.n;
    switch (c.kind) {
    case MapKind::derivation:
        switch (c.family) {
        case Family::diag:
            return !alpha_dot(c.alpha(), beta).is_zero();
        case Family::jordan2:
            return beta[n - 1] > 0 || !alpha_dot(c.alpha(), beta).is_zero();
        case Family::jordan3:
            if (c.params.at(0).is_zero())
                return std::nullopt;
            return true;
        case Family::phi_a:
            return std::nullopt;
        }
        break;
    case MapKind::ederivation:
        switch (c.family) {
        case Family::diag:
            return !alpha_power(c.alpha(), beta).is_one();
        case Family::jordan2:
            return beta[n - 1] > 0 || !alpha_power(c.alpha(), beta).is_one();
        case Family::jordan3:
        case Family::phi_a:
            return unipotent_block_rule(c.params.at(0), beta);
        }
        break;
    case MapKind::endomorphism:
        return std::nullopt;
    }
    return std::nullopt;
}

Polynomial lt_triangular_preimage(const LinearMapSpec& spec, const MonomialOrder& order, const MultiIndex& beta)
{
    if (beta.is_zero())
        throw PreconditionError("lt_triangular_preimage needs a nonconstant monomial");
    const Ring ring{spec.n(), spec.field(), std::max(kDefaultPolynomialCap, beta.degree())};
    Polynomial residual = Polynomial::monomial(ring, beta);
    Polynomial g(ring);
    std::map<MultiIndex, std::pair<Scalar, Polynomial>, GrlexDescending> images;
    while (!residual.is_zero()) {
        auto [gamma, c] = leading_term(residual, order);
        auto it = images.find(gamma);
        if (it == images.end()) {
            Polynomial img = apply(spec, Polynomial::monomial(ring, gamma));
            if (img.is_zero())
                throw LtConditionViolated("image of " + monomial_string(gamma) + " is zero");
            auto [lead, a] = leading_term(img, order);
            if (!(lead == gamma))
                throw LtConditionViolated("leading monomial of the image of " + monomial_string(gamma) + " is " +
                                          monomial_string(lead));
            it = images.emplace(gamma, std::make_pair(a, std::move(img))).first;
        }
        const Scalar factor = c / it->second.first;
        g.add_term(gamma, factor);
        residual -= it->second.second.scaled(factor);
    }
    return g;
}

namespace {

MultiIndex shift(const MultiIndex& beta, std::size_t from, std::size_t to, unsigned k)
{
    MultiIndex out = beta;
    if (out[from] < k)
        throw PreconditionError("negative exponent in shift");
    out[from] -= k;
    out[to] += k;
    return out;
}

Rational binomial(unsigned n, unsigned k)
{
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return Rational(r);
}

class Jordan2Preimages {
public:
    Jordan2Preimages(const CanonicalCase& c, const Ring& ring)
        : ring_(ring), alpha_(c.alpha()), last_(c.n - 1), block_(c.n - 2)
    {
    }

    Polynomial derivation(const MultiIndex& beta)
    {
        const Field k = ring_.field;
        const Scalar s = alpha_dot(alpha_, beta);
        if (s.is_zero()) {
            if (beta[last_] == 0)
                throw PreconditionError(monomial_string(beta) + " is outside the image");
            // X^beta = D(X^{beta + e_{n-1} - e_n}) / (beta_{n-1} + 1)
            return Polynomial::monomial(ring_, shift(beta, last_, block_, 1),
                                        k.from_rational(Rational(1, beta[block_] + 1)));
        }
        // P(beta) = (X^beta - beta_{n-1} P(beta - e_{n-1} + e_n)) / (alpha beta)
        const Scalar inv = s.inverse();
        if (beta[block_] == 0)
            return Polynomial::monomial(ring_, beta, inv);
        return (Polynomial::monomial(ring_, beta) -
                derivation(shift(beta, block_, last_, 1)).scaled(k.from_int(beta[block_])))
            .scaled(inv);
    }

    Polynomial ederivation(const MultiIndex& beta)
    {
        auto it = memo_.find(beta);
        if (it != memo_.end())
            return it->second;
        Polynomial p = ederivation_uncached(beta);
        memo_.emplace(beta, p);
        return p;
    }

private:
    Polynomial ederivation_uncached(const MultiIndex& beta)
    {
        const Field k = ring_.field;
        const unsigned kb = beta[block_];
        const Scalar t = alpha_power(alpha_, beta);
        if (!t.is_one()) {
            // (1 - t) P(beta) = X^beta + sum_{i=1}^{k} C(k, i) alpha^{beta - i e_{n-1}} P(beta - i e_{n-1} + i e_n)
            Polynomial acc = Polynomial::monomial(ring_, beta);
            for (unsigned i = 1; i <= kb; ++i) {
                MultiIndex lowered = beta;
                lowered[block_] -= i;
                Scalar coef = alpha_power(alpha_, lowered).scaled(binomial(kb, i));
                if (!coef.is_zero())
                    acc += ederivation(shift(beta, block_, last_, i)).scaled(coef);
            }
            return acc.scaled((k.one() - t).inverse());
        }
        if (beta[last_] == 0)
            throw PreconditionError(monomial_string(beta) + " is outside the image");
        // -(k+1) alpha^{beta - e_n} P(beta)
        //   = X^{beta + e_{n-1} - e_n} + sum_{i=2}^{k+1} C(k+1, i) alpha^{beta - (i-1) e_{n-1} - e_n} P(gamma_i)
        MultiIndex beta_minus = beta;
        --beta_minus[last_];
        const Scalar lead = alpha_power(alpha_, beta_minus).scaled(Rational(-(static_cast<long>(kb) + 1)));
        Polynomial acc = Polynomial::monomial(ring_, shift(beta, last_, block_, 1));
        for (unsigned i = 2; i <= kb + 1; ++i) {
            MultiIndex lowered = beta_minus;
            lowered[block_] -= (i - 1);
            Scalar coef = alpha_power(alpha_, lowered).scaled(binomial(kb + 1, i));
            if (!coef.is_zero())
                acc += ederivation(shift(beta, block_, last_, i - 1)).scaled(coef);
        }
        return acc.scaled(lead.inverse());
    }

    Ring ring_;
    std::vector<Scalar> alpha_;
    std::size_t last_;
    std::size_t block_;
    std::map<MultiIndex, Polynomial> memo_;
};

}  // namespace

Polynomial constructive_preimage(const CanonicalCase& c, const MultiIndex& beta)
{
    if (c.family != Family::jordan2 || (c.kind != MapKind::derivation && c.kind != MapKind::ederivation))
        throw PreconditionError("constructive_preimage is defined for jordan2 derivations and E-derivations");
    if (c.n < 2 || beta.size() != c.n)
        throw DimensionMismatch("monomial arity does not match the case");
    if (c.params.size() != c.n - 1)
        throw PreconditionError("jordan2 case needs n - 1 parameters");
    const Ring ring{c.n, c.field(), std::max(kDefaultPolynomialCap, beta.degree())};
    Jordan2Preimages builder(c, ring);
    return c.kind == MapKind::derivation ? builder.derivation(beta) : builder.ederivation(beta);
}

MembershipVerdict quotient_member(const CanonicalCase& c, const Polynomial& f)
{
    if (c.family != Family::jordan2 || (c.kind != MapKind::derivation && c.kind != MapKind::ederivation))
        throw PreconditionError("quotient_member is defined for the jordan2 family");
    if (f.nvars() != c.n)
        throw DimensionMismatch("polynomial arity does not match the case");
    const auto alpha = c.alpha();
    const std::size_t last = c.n - 1;
    auto passes_diagonal = [&](const MultiIndex& beta) {
        return c.kind == MapKind::derivation ? !alpha_dot(alpha, beta).is_zero() : !alpha_power(alpha, beta).is_one();
    };
    MembershipVerdict v;
    std::map<unsigned, Polynomial> offending;
    for (const auto& [beta, coef] : f.terms()) {
        if (beta[last] > 0 || passes_diagonal(beta))
            continue;
        offending.try_emplace(beta.degree(), f.ring()).first->second.add_term(beta, coef);
    }
    if (!offending.empty()) {
        auto& [d, residual] = *offending.begin();
        v.failing_component = FailingComponent{d, residual};
        return v;
    }
    Polynomial witness(f.ring());
    for (const auto& [beta, coef] : f.terms()) {
        Polynomial p = constructive_preimage(c, beta);
        for (const auto& [gamma, g] : p.terms())
            witness.add_term(gamma, g * coef);
    }
    v.member = true;
    v.witness = std::move(witness);
    return v;
}

BCDecomposition bc_decompose(const Polynomial& f, unsigned m)
{
    if (m == 0)
        throw PreconditionError("bc_decompose needs m >= 1");
    BCDecomposition out{m, Polynomial(f.ring()), Polynomial(f.ring())};
    for (const auto& [beta, c] : f.terms())
        (beta.degree() % m == 0 ? out.b_part : out.c_part).add_term(beta, c);
    return out;
}

std::string to_string(Identity id)
{
    switch (id) {
    case Identity::lemC:
        return "lemC";
    case Identity::lemDB:
        return "lemDB";
    case Identity::delta_contains_D:
        return "delta_contains_D";
    case Identity::exp_image:
        return "exp_image";
    }
    return "?";
}

std::optional<Identity> identity_from_name(const std::string& name)
{
    for (auto id : {Identity::lemC, Identity::lemDB, Identity::delta_contains_D, Identity::exp_image})
        if (to_string(id) == name)
            return id;
    return std::nullopt;
}

namespace {

Scalar primitive_root(unsigned m)
{
    const Field k = Field::cyclotomic(m);
    return m == 1 ? k.one() : k.zeta();
}

}  // namespace

IdentityReport verify_subspace_identity(Identity id, unsigned m, unsigned d, const IdentityMaps& maps)
{
    if (m == 0)
        throw PreconditionError("verify_subspace_identity needs m >= 1");
    const auto start = std::chrono::steady_clock::now();
    const Scalar a = primitive_root(m);
    const Field k = a.field();
    const Ring ring{3, k, std::max(kDefaultPolynomialCap, d)};
    const LinearMapSpec derivation = maps.derivation(k);
    const LinearMapSpec delta{MapKind::ederivation, maps.phi(a)};
    const bool in_b = d % m == 0;

    IdentityReport r{id, m, d, 0, 0, "equal", false, 0.0};
    switch (id) {
    case Identity::lemC: {
        // delta_a preserves degree, so delta_a(C_d) = C_d is a rank statement
        if (!in_b) {
            r.lhs_rank = GradedImage(delta, ring, d).rank();
            r.rhs_rank = graded_dimension(3, d);
        }
        r.holds = r.lhs_rank == r.rhs_rank;
        break;
    }
    case Identity::lemDB: {
        if (in_b) {
            GradedImage lhs(delta, ring, d), rhs(derivation, ring, d);
            r.lhs_rank = lhs.rank();
            r.rhs_rank = rhs.rank();
            r.holds = lhs.image() == rhs.image();
        } else {
            r.holds = true;
        }
        break;
    }
    case Identity::delta_contains_D: {
        GradedImage lhs(delta, ring, d), rhs(derivation, ring, d);
        r.lhs_rank = lhs.rank();
        r.rhs_rank = rhs.rank();
        r.relation = "contained";
        r.holds = lhs.image().contains(rhs.image());
        break;
    }
    case Identity::exp_image: {
        const LinearMapSpec one_minus_exp{MapKind::ederivation, exp_derivation(derivation).matrix()};
        GradedImage lhs(one_minus_exp, ring, d), rhs(derivation, ring, d);
        r.lhs_rank = lhs.rank();
        r.rhs_rank = rhs.rank();
        r.holds = lhs.image() == rhs.image();
        break;
    }
    }
    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
}

bool exp_matches_phi_one(const IdentityMaps& maps)
{
    const Field q = Field::rationals();
    const LinearMapSpec e = exp_derivation(maps.derivation(q));
    const Matrix phi1 = maps.phi(q.one());
    const Ring ring{3, q};
    for (std::size_t j = 0; j < 3; ++j)
        if (!(e.generator_image(ring, j) == Polynomial::linear_form(ring, phi1.column(j))))
            return false;
    return true;
}

OmegaSweepReport omega_member_sweep(const ImageEngine& engine, unsigned d_max, const WeightVector& omega)
{
    OmegaSweepReport report;
    report.max_degree = d_max;
    const std::size_t n = engine.ring().n;
    if (omega.size() != n)
        throw DimensionMismatch("weight vector length does not match the map");
    for (unsigned d = 1; d <= d_max; ++d) {
        auto img = engine.image(d);
        for (const auto& beta : graded_basis(n, d)) {
            if (dot(omega, beta) >= 0)
                continue;
            ++report.checked;
            auto w = img->preimage(Polynomial::monomial(engine.ring(), beta));
            if (w)
                report.witnesses.emplace_back(beta, std::move(*w));
            else
                report.violations.push_back(beta);
        }
    }
    return report;
}

}  // namespace mzlab
