#include "cli.hpp"

#include "json_io.hpp"
#include "mzlab/error.hpp"
#include "mzlab/mz_verify.hpp"
#include "mzlab/parse.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <ostream>

namespace mzlab::cli {

namespace {

using io::json;

struct Options {
    std::size_t n = 3;
    unsigned m = 1;
    std::optional<unsigned> cap;
    std::string order = "grlex";
    bool text = false;

    std::string case_name;
    std::string params;
    std::string map_kind;
    std::string file;
    std::string poly;
    std::string sigma;
    std::string method = "oracle";
    std::string identity;
    unsigned degree = 2;
    unsigned max_degree = 6;
    unsigned powers = 6;
    unsigned tail = 8;
    std::vector<std::string> multipliers;
    bool no_default_multipliers = false;
    std::string m_list = "2,3,4";
    unsigned samples = 6;
    std::string perturb;
};

class Context {
public:
    Context(const Options& o, std::ostream& out, std::ostream& err) : o_(o), out_(out), err_(err) {}

    Field field() const { return Field::cyclotomic(o_.m); }

    /// Flag, then MZLAB_CAP, then the built-in default.
    unsigned cap() const
    {
        if (o_.cap)
            return *o_.cap;
        if (const char* env = std::getenv("MZLAB_CAP"); env && *env) {
            char* end = nullptr;
            const unsigned long v = std::strtoul(env, &end, 10);
            if (*end != '\0' || v > 1000)
                throw ParseError("MZLAB_CAP must be a non-negative integer", 0);
            return static_cast<unsigned>(v);
        }
        return kDefaultDegreeCap;
    }

    std::optional<CanonicalCase> canonical_case() const
    {
        if (o_.case_name.empty())
            return std::nullopt;
        auto c = case_from_name(o_.case_name, o_.n);
        if (!c)
            throw ParseError("unknown case '" + o_.case_name + "'", 0);
        if (o_.params.empty())
            throw ParseError("--case needs --params", 0);
        c->params = parse_scalar_list(o_.params, field());
        return c;
    }

    LinearMapSpec map() const
    {
        if (auto c = canonical_case())
            return canonical(*c);
        if (o_.file.empty())
            throw ParseError("a map needs --case/--params or --file", 0);
        std::optional<MapKind> kind;
        if (!o_.map_kind.empty())
            kind = io::parse_kind(o_.map_kind);
        return io::load_map(o_.file, field(), kind);
    }

    Ring ring(const LinearMapSpec& spec) const { return Ring{spec.n(), spec.field()}; }

    Polynomial poly(const Ring& ring) const
    {
        if (o_.poly.empty())
            throw ParseError("missing --poly", 0);
        return parse_polynomial(o_.poly, ring);
    }

    void emit(json j, const std::string& text) const
    {
        if (o_.text)
            out_ << text << '\n';
        else
            out_ << j.dump(2) << '\n';
    }

    const Options& opts() const { return o_; }
    std::ostream& err() const { return err_; }
    std::ostream& out() const { return out_; }

private:
    const Options& o_;
    std::ostream& out_;
    std::ostream& err_;
};

json with_schema(const std::string& command, json body)
{
    json j;
    j["schema"] = "mzlab." + command + "/1";
    for (auto& [k, v] : body.items())
        j[k] = v;
    return j;
}

/// c X^beta for a single-term polynomial.
std::pair<MultiIndex, Scalar> single_term(const Polynomial& f)
{
    if (f.size() != 1)
        throw PreconditionError("this method needs a single term c*X^beta");
    return *f.terms().begin();
}

int cmd_apply(const Context& ctx)
{
    const auto spec = ctx.map();
    const auto f = ctx.poly(ctx.ring(spec));
    const auto g = apply(spec, f);
    ctx.emit(with_schema("apply", {{"map", io::map_to_json(spec)}, {"input", to_string(f)}, {"result", to_string(g)}}),
             to_string(g));
    return ok;
}

int cmd_member(const Context& ctx)
{
    const auto spec = ctx.map();
    const auto f = ctx.poly(ctx.ring(spec));
    const auto verdict = ImageEngine(spec, ctx.cap()).member(f);
    json body = io::to_json(verdict);
    body["input"] = to_string(f);
    json closed = nullptr;
    if (auto c = ctx.canonical_case(); c && f.size() == 1 && !f.terms().begin()->first.is_zero())
        if (auto r = monomial_member_closed_form(*c, f.terms().begin()->first))
            closed = *r;
    body["closed_form"] = closed;
    std::string text = verdict.member ? "member; witness " + to_string(*verdict.witness)
                                      : "not a member; fails in degree " +
                                            std::to_string(verdict.failing_component->degree);
    ctx.emit(with_schema("member", body), text);
    return verdict.member ? ok : negative;
}

int cmd_preimage(const Context& ctx)
{
    const auto spec = ctx.map();
    const Ring ring = ctx.ring(spec);
    const auto f = ctx.poly(ring);
    const std::string& method = ctx.opts().method;
    std::optional<Polynomial> pre;
    std::string reason;
    if (method == "oracle") {
        auto v = ImageEngine(spec, ctx.cap()).member(f);
        pre = v.witness;
        if (!pre)
            reason = "not in the image";
    } else if (method == "constructive") {
        auto c = ctx.canonical_case();
        if (!c || c->family != Family::jordan2 || c->kind == MapKind::endomorphism)
            throw PreconditionError("--method constructive needs --case jordan2-deriv or jordan2-ederiv");
        const auto [beta, coeff] = single_term(f);
        if (beta.is_zero() || !monomial_member_closed_form(*c, beta).value_or(false))
            reason = "not in the image";
        else
            pre = constructive_preimage(*c, beta).scaled(coeff);
    } else if (method == "lt") {
        const auto [beta, coeff] = single_term(f);
        try {
            pre = lt_triangular_preimage(spec, parse_order(ctx.opts().order, spec.n()), beta).scaled(coeff);
        } catch (const LtConditionViolated& e) {
            reason = e.what();
        }
    } else {
        throw ParseError("unknown method '" + method + "'", 0);
    }
    json body;
    body["method"] = method;
    body["input"] = to_string(f);
    body["member"] = pre.has_value();
    body["preimage"] = pre ? json(to_string(*pre)) : json(nullptr);
    body["verified"] = pre ? json(apply(spec, *pre) == f) : json(nullptr);
    body["reason"] = pre ? json(nullptr) : json(reason);
    ctx.emit(with_schema("preimage", body), pre ? to_string(*pre) : reason);
    return pre ? ok : negative;
}

int cmd_image_basis(const Context& ctx)
{
    const auto spec = ctx.map();
    const auto img = image_basis(spec, ctx.opts().degree, ctx.cap());
    json basis = json::array();
    std::string text;
    for (const auto& p : img.image_basis()) {
        basis.push_back(to_string(p));
        text += to_string(p) + '\n';
    }
    json body{{"degree", img.degree()}, {"dimension", img.dimension()}, {"rank", img.rank()}, {"basis", basis}};
    text = "rank " + std::to_string(img.rank()) + " of " + std::to_string(img.dimension()) + "\n" + text;
    if (!text.empty() && text.back() == '\n')
        text.pop_back();
    ctx.emit(with_schema("image-basis", body), text);
    return ok;
}

json params_json(const CanonicalCase& c)
{
    json p = json::array();
    for (const auto& s : c.params)
        p.push_back(to_string(s));
    return p;
}

int cmd_canonical(const Context& ctx)
{
    json body;
    std::string text;
    if (auto c = ctx.canonical_case()) {
        const auto spec = canonical(*c);
        body["case"] = case_name(*c);
        body["params"] = params_json(*c);
        body["map"] = io::map_to_json(spec);
        body["sigma"] = nullptr;
        text = to_string(spec.matrix());
    } else {
        const auto spec = ctx.map();
        Jordanization jz = [&] {
            try {
                return jordanize(spec);
            } catch (const PreconditionError& e) {
                throw std::runtime_error(e.what());
            }
        }();
        body["case"] = case_name(jz.form);
        body["params"] = params_json(jz.form);
        body["map"] = io::map_to_json(canonical(jz.form));
        body["sigma"] = io::to_json(jz.sigma.matrix());
        text = case_name(jz.form) + " " + params_string(jz.form) + "\nsigma\n" + to_string(jz.sigma.matrix());
    }
    ctx.emit(with_schema("canonical", body), text);
    return ok;
}

int cmd_conjugate(const Context& ctx)
{
    const auto spec = ctx.map();
    if (ctx.opts().sigma.empty())
        throw ParseError("missing --sigma", 0);
    json sj;
    try {
        sj = json::parse(ctx.opts().sigma);
    } catch (const json::parse_error& e) {
        throw ParseError("--sigma is not valid JSON", e.byte == 0 ? 0 : e.byte - 1);
    }
    const ConjugationMap sigma(io::matrix_from_json(sj, spec.field()));
    const auto result = conjugate(sigma, spec);
    ctx.emit(with_schema("conjugate", {{"map", io::map_to_json(result)}, {"sigma", io::to_json(sigma.matrix())}}),
             to_string(result.matrix()));
    return ok;
}

int cmd_exp(const Context& ctx)
{
    const auto spec = ctx.map();
    if (spec.kind() != MapKind::derivation || !is_nilpotent(spec.matrix()))
        throw std::runtime_error("the map is not a nilpotent derivation");
    const auto e = exp_derivation(spec);
    const Ring ring = ctx.ring(spec);
    json gens = json::array();
    std::string text;
    for (std::size_t j = 0; j < spec.n(); ++j) {
        const auto img = e.generator_image(ring, j);
        gens.push_back(to_string(img));
        text += "x" + std::to_string(j + 1) + " -> " + to_string(img) + (j + 1 < spec.n() ? "\n" : "");
    }
    ctx.emit(with_schema("exp", {{"map", io::map_to_json(e)}, {"generators", gens}}), text);
    return ok;
}

IdentityMaps perturbed_maps(const std::string& perturb)
{
    IdentityMaps maps;
    if (perturb.empty())
        return maps;
    const MultiIndex at = parse_multiindex(perturb, 2);
    if (at[0] < 1 || at[0] > 3 || at[1] < 1 || at[1] > 3)
        throw ParseError("--perturb entries must lie in 1..3", 0);
    maps.phi = [i = at[0] - 1, j = at[1] - 1](const Scalar& a) {
        Matrix m = phi_a_matrix(a);
        m(i, j) = m(i, j) + a.field().one();
        return m;
    };
    return maps;
}

int cmd_verify(const Context& ctx)
{
    const auto& o = ctx.opts();
    const IdentityMaps maps = perturbed_maps(o.perturb);
    if (o.identity == "exp_phi1") {
        const bool holds = exp_matches_phi_one(maps);
        ctx.emit(with_schema("verify", {{"identity", "exp_phi1"}, {"holds", holds}}),
                 holds ? "exp_phi1 holds" : "exp_phi1 fails");
        return holds ? ok : negative;
    }
    const auto id = identity_from_name(o.identity);
    if (!id)
        throw ParseError("unknown identity '" + o.identity + "'", 0);
    if (o.degree > ctx.cap())
        throw DegreeCapExceeded(o.degree, ctx.cap());
    const auto rep = verify_subspace_identity(*id, o.m, o.degree, maps);
    ctx.emit(with_schema("verify", io::to_json(rep)),
             to_string(rep.identity) + " m=" + std::to_string(rep.m) + " d=" + std::to_string(rep.degree) + ": " +
                 (rep.holds ? "holds" : "fails") + " (ranks " + std::to_string(rep.lhs_rank) + ", " +
                 std::to_string(rep.rhs_rank) + ")");
    return rep.holds ? ok : negative;
}

int cmd_mz_scan(const Context& ctx)
{
    const auto& o = ctx.opts();
    const auto spec = ctx.map();
    const Ring ring = ctx.ring(spec);
    const auto f = ctx.poly(ring);
    MZScanConfig cfg;
    cfg.power_bound = o.powers;
    cfg.tail_bound = o.tail;
    cfg.degree_cap = ctx.cap();
    if (!o.no_default_multipliers)
        cfg.multipliers = default_multipliers(ring);
    for (const auto& g : o.multipliers)
        cfg.multipliers.push_back(parse_polynomial(g, ring));
    const auto rep = mz_scan(spec, f, cfg);
    json body = io::to_json(rep);
    body["map"] = io::map_to_json(spec);
    std::string text = "f = " + to_string(rep.f) + ": powers 1.." + std::to_string(rep.power_bound) + " " +
                       (rep.all_powers_in() ? "all in the image"
                                            : "escape at " + std::to_string(*rep.first_escape));
    for (const auto& t : rep.tails)
        text += "\n  g = " + to_string(t.g) + ": tail " +
                (t.tail_start ? "from " + std::to_string(*t.tail_start) : std::string("none"));
    text += "\n(evidence, not proof)";
    ctx.emit(with_schema("mz-scan", body), text);
    return rep.suspect() ? negative : ok;
}

int cmd_suite(const Context& ctx)
{
    const auto& o = ctx.opts();
    SuiteConfig cfg;
    cfg.max_degree = o.max_degree;
    cfg.samples = o.samples;
    cfg.m_list.clear();
    const auto parts = parse_scalar_list(o.m_list, Field::rationals());
    for (const auto& s : parts) {
        const Rational v = s.rational_value();
        if (v.get_den() != 1 || v < 1 || v > 1000)
            throw ParseError("--m-list takes integers in 1..1000", 0);
        cfg.m_list.push_back(static_cast<unsigned>(v.get_num().get_ui()));
    }
    cfg.maps = perturbed_maps(o.perturb);
    const auto rep = theorem_suite(cfg);
    for (const auto& c : rep.checks) {
        if (o.text)
            ctx.out() << (c.passed ? "PASS " : "FAIL ") << c.check_id << ' ' << c.case_name << " [" << c.params
                      << "] m=" << c.m << " d=" << c.degree << ' ' << c.detail << '\n';
        else
            ctx.out() << io::to_json(c).dump() << '\n';
    }
    return rep.all_passed() ? ok : negative;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Options o;
    CLI::App app{"Exact images of linear derivations and E-derivations", "mzlab"};
    app.require_subcommand(1);
    app.add_option("--n", o.n, "number of variables")->check(CLI::Range(1, 16));
    app.add_option("--m", o.m, "conductor of the coefficient field Q(zeta_m)")->check(CLI::Range(1, 1000));
    app.add_option("--cap", o.cap, "degree cap for image computations (overrides MZLAB_CAP)");
    app.add_option("--order", o.order, "monomial order, e.g. grlex or lex:3,1,2 (used by preimage --method lt)");
    app.add_flag("--text", o.text, "human-readable output");
    app.add_flag("--json{false}", o.text, "JSON output (default)");

    auto add_map_options = [&](CLI::App* sub) {
        sub->add_option("--case", o.case_name, "canonical case, e.g. diag-deriv, jordan2-ederiv, phi-a");
        sub->add_option("--params", o.params, "comma-separated case parameters");
        sub->add_option("--map", o.map_kind, "map kind for --file: derivation, endo, ederivation");
        sub->add_option("--file", o.file, "map file {kind, n, matrix}");
    };
    std::map<std::string, std::function<int(const Context&)>> handlers;
    auto add = [&](const std::string& name, const std::string& help, auto handler, bool map_options = true) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->fallthrough();
        if (map_options)
            add_map_options(sub);
        handlers[name] = handler;
        return sub;
    };

    add("apply", "apply a map to a polynomial", cmd_apply)->add_option("--poly", o.poly, "the polynomial");
    add("member", "decide image membership", cmd_member)->add_option("--poly", o.poly, "the polynomial");
    {
        auto* s = add("preimage", "compute a preimage", cmd_preimage);
        s->add_option("--poly", o.poly, "the polynomial");
        s->add_option("--method", o.method, "oracle, constructive or lt")
            ->check(CLI::IsMember({"oracle", "constructive", "lt"}));
    }
    add("image-basis", "basis of the image in one degree", cmd_image_basis)
        ->add_option("--degree", o.degree, "homogeneous degree");
    add("canonical", "matrix of a canonical case, or the canonical form of a map file", cmd_canonical);
    add("conjugate", "conjugate a map by a change of variables", cmd_conjugate)
        ->add_option("--sigma", o.sigma, "matrix as JSON, e.g. [[\"1\",\"0\"],[\"1\",\"1\"]]");
    add("exp", "exponential of a nilpotent derivation", cmd_exp);
    {
        auto* s = add("verify", "check a subspace identity in one degree", cmd_verify, false);
        s->add_option("identity", o.identity, "lemC, lemDB, delta_contains_D, exp_image or exp_phi1")->required();
        s->add_option("--degree", o.degree, "homogeneous degree");
        s->add_option("--perturb", o.perturb, "add 1 to entry i,j of the phi_a matrix");
    }
    {
        auto* s = add("mz-scan", "finite scan for the Mathieu-Zhao property", cmd_mz_scan);
        s->add_option("--poly", o.poly, "the polynomial f");
        s->add_option("--powers", o.powers, "test f^1..f^I");
        s->add_option("--tail", o.tail, "test g f^1..g f^T");
        s->add_option("--multiplier", o.multipliers, "extra multiplier g (repeatable)");
        s->add_flag("--no-default-multipliers", o.no_default_multipliers, "skip the monomials of degree <= 2");
    }
    {
        auto* s = add("suite", "run every finite-degree check", cmd_suite, false);
        s->add_option("--max-degree", o.max_degree, "highest degree checked (0 runs nothing)");
        s->add_option("--m-list", o.m_list, "conductors for the root-of-unity checks");
        s->add_option("--samples", o.samples, "parameter samples per family");
        s->add_option("--perturb", o.perturb, "add 1 to entry i,j of the phi_a matrix");
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return usage;
    }

    const std::string name = app.get_subcommands().front()->get_name();
    const Context ctx(o, out, err);
    try {
        return handlers.at(name)(ctx);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return usage;
    } catch (const std::runtime_error& e) {
        // well-posed input with no answer of the requested kind
        err << "error: " << e.what() << '\n';
        return negative;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return usage;
    }
}

}  // namespace mzlab::cli
