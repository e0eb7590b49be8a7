#include "mzlab/mz_verify.hpp"

#include "mzlab/error.hpp"

#include <algorithm>

namespace mzlab {

bool MZScanReport::all_powers_in() const
{
    return std::all_of(powers.begin(), powers.end(), [](bool b) { return b; });
}

bool MZScanReport::suspect() const
{
    return all_powers_in() &&
           std::any_of(tails.begin(), tails.end(), [](const TailResult& t) { return !t.tail_start.has_value(); });
}

std::vector<Polynomial> default_multipliers(const Ring& ring, unsigned max_degree)
{
    std::vector<Polynomial> out;
    for (unsigned d = max_degree + 1; d-- > 0;)
        for (const auto& beta : graded_basis(ring.n, d))
            out.push_back(Polynomial::monomial(ring, beta));
    return out;
}

MZScanReport mz_scan(const LinearMapSpec& spec, const Polynomial& f, const MZScanConfig& config)
{
    const unsigned fd = static_cast<unsigned>(std::max(f.degree(), 0));
    unsigned gd = 0;
    for (const auto& g : config.multipliers)
        gd = std::max(gd, static_cast<unsigned>(std::max(g.degree(), 0)));
    const unsigned needed = fd * std::max(config.power_bound, config.tail_bound) + gd;
    if (needed > config.degree_cap)
        throw DegreeCapExceeded(needed, config.degree_cap);

    ImageEngine engine(spec, config.degree_cap);
    const Ring& ring = engine.ring();
    auto lift = [&](const Polynomial& p) {
        Polynomial q(ring);
        q += p;
        return q;
    };
    const Polynomial base = lift(f);
    MZScanReport report{base, config.power_bound, config.tail_bound, {}, std::nullopt, {}};

    Polynomial power = Polynomial::constant(ring, ring.field.one());
    for (unsigned i = 1; i <= config.power_bound; ++i) {
        power = power * base;
        const bool in = engine.is_member(power);
        report.powers.push_back(in);
        if (!in && !report.first_escape)
            report.first_escape = i;
    }
    for (const auto& g_in : config.multipliers) {
        TailResult t{lift(g_in), {}, std::nullopt};
        Polynomial prod = t.g;
        for (unsigned m = 1; m <= config.tail_bound; ++m) {
            prod = prod * base;
            t.membership.push_back(engine.is_member(prod));
        }
        unsigned start = config.tail_bound + 1;
        while (start > 1 && t.membership[start - 2])
            --start;
        if (start <= config.tail_bound)
            t.tail_start = start;
        report.tails.push_back(std::move(t));
    }
    return report;
}

EscapeResult power_escape_search(const ImageEngine& engine, const Polynomial& f, unsigned power_bound)
{
    const unsigned fd = static_cast<unsigned>(std::max(f.degree(), 0));
    if (fd * power_bound > engine.degree_cap())
        throw DegreeCapExceeded(fd * power_bound, engine.degree_cap());
    Polynomial base(engine.ring());
    base += f;
    Polynomial power = Polynomial::constant(engine.ring(), engine.ring().field.one());
    for (unsigned i = 1; i <= power_bound; ++i) {
        power = power * base;
        if (!engine.is_member(power))
            return {i, power_bound};
    }
    return {std::nullopt, power_bound};
}

namespace {

Scalar rat(Field k, long p, long q = 1)
{
    return k.from_rational(Rational(p, q));
}

CanonicalCase make_case(Family family, MapKind kind, std::vector<Scalar> params)
{
    CanonicalCase c;
    c.family = family;
    c.kind = kind;
    c.n = 3;
    c.params = std::move(params);
    return c;
}

}  // namespace

std::vector<CanonicalCase> parameter_samples(Family family, MapKind kind)
{
    const Field q = Field::rationals();
    const Field q2 = Field::cyclotomic(2);
    const Field q3 = Field::cyclotomic(3);
    const Field q4 = Field::cyclotomic(4);
    const Scalar z3 = q3.zeta(), z4 = q4.zeta();
    std::vector<std::vector<Scalar>> sets;
    switch (family) {
    case Family::diag:
        if (kind == MapKind::derivation)
            sets = {{rat(q, 1), rat(q, -1), rat(q, 0)},
                    {rat(q, 1), rat(q, 1), rat(q, -2)},
                    {rat(q, 2), rat(q, -1, 2), rat(q, 1)},
                    {z3, q3.one(), q3.zero()},
                    {z4, -z4, q4.one()}};
        else
            sets = {{rat(q, 1), rat(q, 1), rat(q, 1)},
                    {q2.zeta(), q2.zeta(), q2.one()},
                    {z3, z3 * z3, q3.one()},
                    {z4, z4 * z4, q4.from_int(2)},
                    {rat(q, 2), rat(q, -1, 2), rat(q, 1)}};
        break;
    case Family::jordan2:
        if (kind == MapKind::derivation)
            sets = {{rat(q, 1), rat(q, -1)},
                    {rat(q, 0), rat(q, 0)},
                    {rat(q, 2), rat(q, -1, 2)},
                    {z3, -z3},
                    {z4, q4.one()}};
        else
            sets = {{rat(q, 1), rat(q, 1)},
                    {q2.zeta(), q2.zeta()},
                    {z3, z3 * z3},
                    {z4, z4 * z4},
                    {rat(q, 2), rat(q, -1, 2)}};
        break;
    case Family::jordan3:
    case Family::phi_a:
        sets = {{rat(q, 1)}, {q2.zeta()}, {z3}, {z4}, {rat(q, 2)}, {rat(q, -1, 2)}};
        break;
    }
    std::vector<CanonicalCase> out;
    for (auto& s : sets)
        out.push_back(make_case(family, kind, std::move(s)));
    return out;
}

std::vector<std::pair<Family, MapKind>> closed_form_families()
{
    return {{Family::diag, MapKind::derivation},    {Family::jordan2, MapKind::derivation},
            {Family::jordan3, MapKind::derivation}, {Family::diag, MapKind::ederivation},
            {Family::jordan2, MapKind::ederivation}, {Family::jordan3, MapKind::ederivation}};
}

std::string params_string(const CanonicalCase& c)
{
    std::string s;
    for (std::size_t i = 0; i < c.params.size(); ++i)
        s += (i ? "," : "") + to_string(c.params[i]);
    return s;
}

bool SuiteReport::all_passed() const
{
    return failures() == 0;
}

std::size_t SuiteReport::failures() const
{
    return static_cast<std::size_t>(
        std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return !c.passed; }));
}

namespace {

template <class Fn>
void guarded(SuiteReport& report, CheckResult base, Fn&& fn)
{
    try {
        fn(base);
    } catch (const std::exception& e) {
        base.passed = false;
        base.detail = std::string("error: ") + e.what();
    }
    report.checks.push_back(std::move(base));
}

void closed_form_checks(SuiteReport& report, const SuiteConfig& cfg)
{
    auto families = closed_form_families();
    families.emplace_back(Family::phi_a, MapKind::ederivation);
    for (const auto& [family, kind] : families) {
        auto samples = parameter_samples(family, kind);
        if (samples.size() > cfg.samples)
            samples.resize(cfg.samples);
        for (const auto& c : samples) {
            const LinearMapSpec spec = canonical(c);
            ImageEngine engine(spec, cfg.max_degree);
            for (unsigned d = 1; d <= cfg.max_degree; ++d) {
                CheckResult base{"closed_form", case_name(c), params_string(c), c.field().conductor(), d, false, ""};
                guarded(report, base, [&](CheckResult& r) {
                    auto img = engine.image(d);
                    std::size_t agree = 0, deferred = 0, disagree = 0;
                    for (const auto& beta : img->basis_monomials()) {
                        auto closed = monomial_member_closed_form(c, beta);
                        if (!closed) {
                            ++deferred;
                            continue;
                        }
                        const bool oracle = img->preimage(Polynomial::monomial(engine.ring(), beta)).has_value();
                        (*closed == oracle ? agree : disagree) += 1;
                        if (*closed != oracle && r.detail.empty())
                            r.detail = "first disagreement at " + monomial_string(beta) + "; ";
                    }
                    r.passed = disagree == 0;
                    r.detail += "agree=" + std::to_string(agree) + " deferred=" + std::to_string(deferred) +
                                " disagree=" + std::to_string(disagree);
                });
            }
        }
    }
}

void identity_checks(SuiteReport& report, const SuiteConfig& cfg)
{
    CheckResult exp_base{"exp_phi1", "standard-D", "", 1, 0, false, ""};
    guarded(report, exp_base, [&](CheckResult& r) {
        r.passed = exp_matches_phi_one(cfg.maps);
        r.detail = r.passed ? "e^D = phi_1 on x1, x2, x3" : "e^D differs from phi_1";
    });
    for (unsigned m : cfg.m_list)
        for (auto id : {Identity::lemC, Identity::lemDB, Identity::delta_contains_D, Identity::exp_image})
            for (unsigned d = 1; d <= cfg.max_degree; ++d) {
                CheckResult base{"identity/" + to_string(id), "phi-a", "z", m, d, false, ""};
                guarded(report, base, [&](CheckResult& r) {
                    auto rep = verify_subspace_identity(id, m, d, cfg.maps);
                    r.passed = rep.holds;
                    r.detail = "lhs_rank=" + std::to_string(rep.lhs_rank) + " rhs_rank=" +
                               std::to_string(rep.rhs_rank) + " " + rep.relation;
                });
            }
}

void omega_checks(SuiteReport& report, const SuiteConfig& cfg)
{
    auto run = [&](const std::string& name, const LinearMapSpec& spec, unsigned m, const std::string& params) {
        CheckResult base{"omega_sweep", name, params, m, cfg.max_degree, false, ""};
        guarded(report, base, [&](CheckResult& r) {
            ImageEngine engine(spec, cfg.max_degree);
            auto sweep = omega_member_sweep(engine, cfg.max_degree);
            r.passed = sweep.violations.empty();
            r.detail = "checked=" + std::to_string(sweep.checked) +
                       " violations=" + std::to_string(sweep.violations.size());
        });
    };
    run("standard-D", cfg.maps.derivation(Field::rationals()), 1, "");
    for (unsigned m : cfg.m_list) {
        const Field k = Field::cyclotomic(m);
        const Scalar a = m == 1 ? k.one() : k.zeta();
        run("phi-a", LinearMapSpec{MapKind::ederivation, cfg.maps.phi(a)}, m, "z");
    }
}

void constructive_checks(SuiteReport& report, const SuiteConfig& cfg)
{
    for (auto kind : {MapKind::derivation, MapKind::ederivation}) {
        auto samples = parameter_samples(Family::jordan2, kind);
        if (samples.size() > cfg.samples)
            samples.resize(cfg.samples);
        for (const auto& c : samples) {
            CheckResult base{"constructive", case_name(c), params_string(c), c.field().conductor(), cfg.max_degree,
                             false, ""};
            guarded(report, base, [&](CheckResult& r) {
                const LinearMapSpec spec = canonical(c);
                const Ring ring{c.n, c.field()};
                std::size_t checked = 0, bad = 0;
                for (unsigned d = 1; d <= cfg.max_degree; ++d)
                    for (const auto& beta : graded_basis(c.n, d)) {
                        if (!monomial_member_closed_form(c, beta).value_or(false))
                            continue;
                        ++checked;
                        if (!(apply(spec, constructive_preimage(c, beta)) == Polynomial::monomial(ring, beta)))
                            ++bad;
                    }
                r.passed = bad == 0;
                r.detail = "checked=" + std::to_string(checked) + " unsound=" + std::to_string(bad);
            });
        }
    }
}

void scan_checks(SuiteReport& report, const SuiteConfig& cfg)
{
    // diag(1, -1, 0), f = x1, g = x2: g f^m = x1^m x2 has alpha-weight m - 1
    if (cfg.max_degree >= 3) {
        CheckResult base{"mz_scan", "diag-deriv", "1,-1,0", 1, cfg.max_degree, false, ""};
        guarded(report, base, [&](CheckResult& r) {
            const Field q = Field::rationals();
            auto c = make_case(Family::diag, MapKind::derivation, {rat(q, 1), rat(q, -1), rat(q, 0)});
            const Ring ring{3, q};
            MZScanConfig sc;
            sc.power_bound = cfg.max_degree - 1;
            sc.tail_bound = cfg.max_degree - 1;
            sc.multipliers = {Polynomial::variable(ring, 1)};
            sc.degree_cap = cfg.max_degree;
            auto rep = mz_scan(canonical(c), Polynomial::variable(ring, 0), sc);
            const auto start = rep.tails.front().tail_start;
            r.passed = rep.all_powers_in() && start == 2u;
            r.detail = "all_powers_in=" + std::string(rep.all_powers_in() ? "true" : "false") +
                       " tail_start=" + (start ? std::to_string(*start) : "none");
        });
    }
    // delta_{-1}: x3 is in the image, x3^2 is not
    if (cfg.max_degree >= 2) {
        CheckResult base{"escape", "phi-a", "-1", 2, 2, false, ""};
        guarded(report, base, [&](CheckResult& r) {
            const Field k = Field::cyclotomic(2);
            ImageEngine engine(LinearMapSpec{MapKind::ederivation, cfg.maps.phi(k.zeta())}, cfg.max_degree);
            auto esc = power_escape_search(engine, Polynomial::variable(engine.ring(), 2), 2);
            r.passed = esc.index == 2u;
            r.detail = "first_escape=" + (esc.index ? std::to_string(*esc.index) : std::string("none"));
        });
    }
}

}  // namespace

SuiteReport theorem_suite(const SuiteConfig& config)
{
    SuiteReport report;
    if (config.max_degree == 0)
        return report;
    closed_form_checks(report, config);
    identity_checks(report, config);
    omega_checks(report, config);
    constructive_checks(report, config);
    scan_checks(report, config);
    return report;
}

}  // namespace mzlab
