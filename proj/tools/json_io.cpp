#include "json_io.hpp"

#include "mzlab/error.hpp"
#include "mzlab/parse.hpp"

#include <fstream>

namespace mzlab::io {

MapKind parse_kind(const std::string& text)
{
    if (text == "derivation")
        return MapKind::derivation;
    if (text == "endo" || text == "endomorphism")
        return MapKind::endomorphism;
    if (text == "ederivation")
        return MapKind::ederivation;
    throw ParseError("unknown map kind '" + text + "'", 0);
}

json to_json(const Scalar& s)
{
    return to_string(s);
}

json to_json(const Matrix& m)
{
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j)
            row.push_back(to_string(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

json to_json(const Polynomial& f)
{
    return to_string(f);
}

json to_json(const MultiIndex& beta)
{
    return beta.exponents();
}

Matrix matrix_from_json(const json& j, Field field)
{
    if (!j.is_array() || j.empty())
        throw ParseError("matrix must be a non-empty array of rows", 0);
    std::vector<Vector> rows;
    for (const auto& r : j) {
        if (!r.is_array())
            throw ParseError("matrix row must be an array", 0);
        Vector row;
        for (const auto& e : r) {
            if (e.is_string())
                row.push_back(parse_scalar(e.get<std::string>(), field));
            else if (e.is_number_integer())
                row.push_back(field.from_int(e.get<long>()));
            else
                throw ParseError("matrix entry must be scalar text or an integer", 0);
        }
        if (!rows.empty() && row.size() != rows.front().size())
            throw DimensionMismatch("ragged matrix rows");
        rows.push_back(std::move(row));
    }
    return Matrix::from_rows(field, rows);
}

LinearMapSpec map_from_json(const json& j, Field field, std::optional<MapKind> kind_override)
{
    if (!j.is_object() || !j.contains("matrix"))
        throw ParseError("map document needs a \"matrix\" member", 0);
    MapKind kind = MapKind::endomorphism;
    if (kind_override)
        kind = *kind_override;
    else if (j.contains("kind"))
        kind = parse_kind(j.at("kind").get<std::string>());
    else
        throw ParseError("map document needs a \"kind\" member", 0);
    Matrix m = matrix_from_json(j.at("matrix"), field);
    if (j.contains("n") && j.at("n").get<std::size_t>() != m.rows())
        throw DimensionMismatch("\"n\" disagrees with the matrix size");
    return LinearMapSpec(kind, std::move(m));
}

json map_to_json(const LinearMapSpec& spec)
{
    json j;
    j["kind"] = to_string(spec.kind());
    j["n"] = spec.n();
    j["matrix"] = to_json(spec.matrix());
    return j;
}

LinearMapSpec load_map(const std::filesystem::path& path, Field field, std::optional<MapKind> kind_override)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open " + path.string(), 0);
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON in ") + path.string(), e.byte == 0 ? 0 : e.byte - 1);
    }
    return map_from_json(j, field, kind_override);
}

json to_json(const MembershipVerdict& v)
{
    json j;
    j["member"] = v.member;
    j["witness"] = v.witness ? json(to_string(*v.witness)) : json(nullptr);
    if (v.failing_component)
        j["failing_component"] = {{"degree", v.failing_component->degree},
                                  {"residual", to_string(v.failing_component->residual)}};
    else
        j["failing_component"] = nullptr;
    return j;
}

json to_json(const IdentityReport& r, bool include_timing)
{
    json j;
    j["identity"] = to_string(r.identity);
    j["m"] = r.m;
    j["degree"] = r.degree;
    j["lhs_rank"] = r.lhs_rank;
    j["rhs_rank"] = r.rhs_rank;
    j["relation"] = r.relation;
    j["holds"] = r.holds;
    if (include_timing)
        j["elapsed_ms"] = r.elapsed_ms;
    return j;
}

json to_json(const MZScanReport& r)
{
    json j;
    j["f"] = to_string(r.f);
    j["power_bound"] = r.power_bound;
    j["tail_bound"] = r.tail_bound;
    j["powers"] = r.powers;
    j["all_powers_in"] = r.all_powers_in();
    j["first_escape"] = r.first_escape ? json(*r.first_escape) : json(nullptr);
    json tails = json::array();
    for (const auto& t : r.tails) {
        json row;
        row["g"] = to_string(t.g);
        row["membership"] = t.membership;
        row["tail_start"] = t.tail_start ? json(*t.tail_start) : json(nullptr);
        tails.push_back(std::move(row));
    }
    j["tails"] = std::move(tails);
    j["suspect"] = r.suspect();
    j["evidence"] = "evidence, not proof";
    return j;
}

json to_json(const EscapeResult& r)
{
    json j;
    j["bound"] = r.bound;
    j["escape_index"] = r.index ? json(*r.index) : json(nullptr);
    j["inconclusive"] = r.inconclusive();
    return j;
}

json to_json(const CheckResult& c)
{
    json j;
    j["check_id"] = c.check_id;
    j["case"] = c.case_name;
    j["params"] = c.params;
    j["m"] = c.m;
    j["d"] = c.degree;
    j["status"] = c.passed ? "pass" : "fail";
    j["detail"] = c.detail;
    return j;
}

}  // namespace mzlab::io
