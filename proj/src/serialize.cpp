#include "qcomb/serialize.hpp"

#include <sstream>
#include <stdexcept>

namespace qcomb {

Json to_json(const BigInt& v) { return to_string(v); }

Json to_json(const QPoly& p)
{
    Json out = Json::array();
    for (const auto& c : p.coeffs()) {
        out.push_back(to_string(c));
    }
    return out;
}

Json to_json(const MPoly& p)
{
    Json out = Json::array();
    for (const auto& [e, c] : p.terms()) {
        out.push_back({{"exps", {e[0], e[1], e[2], e[3]}}, {"coeff", to_string(c)}});
    }
    return out;
}

Json to_json(const Value& v)
{
    return std::visit(
        [](const auto& x) -> Json {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, BigInt>) {
                return {{"kind", "integer"}, {"value", to_json(x)}};
            } else if constexpr (std::is_same_v<T, QPoly>) {
                return {{"kind", "qpoly"}, {"value", to_json(x)}};
            } else {
                return {{"kind", "mpoly"}, {"value", to_json(x)}};
            }
        },
        v);
}

Json to_json(const Grid& g)
{
    Json axes = Json::array();
    for (const auto& [name, range] : g.ranges) {
        axes.push_back({{"name", name}, {"lo", range.lo}, {"hi", range.hi}});
    }
    Json out = {{"axes", axes}};
    if (g.max_mn) {
        out["max_mn"] = *g.max_mn;
    }
    return out;
}

Json to_json(const IdentityReport& r)
{
    Json out = {{"identity", r.identity},
                {"grid", to_json(r.grid)},
                {"cells_checked", r.cells_checked},
                {"status", status_name(r.status)}};
    if (r.counterexample) {
        const auto& ce = *r.counterexample;
        Json params = Json::object();
        for (const auto& [k, v] : ce.params) {
            params[k] = v;
        }
        Json c = {{"params", params}, {"lhs", to_json(ce.lhs)}, {"rhs", to_json(ce.rhs)}};
        if (ce.structure) {
            c["structure"] = *ce.structure;
        }
        out["counterexample"] = c;
    }
    if (!r.note.empty()) {
        out["note"] = r.note;
    }
    return out;
}

Json to_json(const FamilyRow& row)
{
    Json out = {{"family", family_name(row.family)}, {"n", row.n}};
    if (row.k >= 0) {
        out["k"] = row.k;
    }
    if (row.r >= 0) {
        out["r"] = row.r;
    }
    out["provenance"] = provenance_name(row.provenance);
    out["value"] = std::visit([](const auto& v) { return to_json(v); }, row.value);
    return out;
}

BigInt bigint_from_json(const Json& j)
{
    if (!j.is_string()) {
        throw std::invalid_argument("expected a decimal string");
    }
    return parse_bigint(j.get<std::string>());
}

QPoly qpoly_from_json(const Json& j)
{
    if (!j.is_array()) {
        throw std::invalid_argument("expected a coefficient array");
    }
    std::vector<BigInt> coeffs;
    for (const auto& c : j) {
        coeffs.push_back(bigint_from_json(c));
    }
    QPoly p(std::move(coeffs));
    if (p.coeffs().size() != j.size()) {
        throw std::invalid_argument("coefficient array has trailing zeros");
    }
    return p;
}

MPoly mpoly_from_json(const Json& j)
{
    if (!j.is_array()) {
        throw std::invalid_argument("expected a term array");
    }
    MPoly p;
    for (const auto& t : j) {
        const auto& e = t.at("exps");
        if (!e.is_array() || e.size() != 4) {
            throw std::invalid_argument("exps must have four entries");
        }
        Exponents ex{e[0].get<std::uint32_t>(), e[1].get<std::uint32_t>(), e[2].get<std::uint32_t>(),
                     e[3].get<std::uint32_t>()};
        const BigInt c = bigint_from_json(t.at("coeff"));
        if (c == 0 || p.coefficient(ex) != 0) {
            throw std::invalid_argument("zero or repeated term");
        }
        p += MPoly::from_monomial(ex, c);
    }
    return p;
}

Value value_from_json(const Json& j)
{
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "integer") {
        return bigint_from_json(j.at("value"));
    }
    if (kind == "qpoly") {
        return qpoly_from_json(j.at("value"));
    }
    if (kind == "mpoly") {
        return mpoly_from_json(j.at("value"));
    }
    throw std::invalid_argument("unknown value kind '" + kind + "'");
}

Grid grid_from_json(const Json& j)
{
    Grid g;
    for (const auto& a : j.at("axes")) {
        g.ranges.emplace_back(a.at("name").get<std::string>(), IntRange{a.at("lo").get<int>(), a.at("hi").get<int>()});
    }
    if (j.contains("max_mn")) {
        g.max_mn = j.at("max_mn").get<int>();
    }
    return g;
}

IdentityReport report_from_json(const Json& j)
{
    IdentityReport r;
    r.identity = j.at("identity").get<std::string>();
    r.grid = grid_from_json(j.at("grid"));
    r.cells_checked = j.at("cells_checked").get<std::uint64_t>();
    r.status = parse_status(j.at("status").get<std::string>());
    if (j.contains("counterexample")) {
        const auto& c = j.at("counterexample");
        Counterexample ce;
        for (const auto& [k, v] : c.at("params").items()) {
            ce.params[k] = v.get<int>();
        }
        ce.lhs = value_from_json(c.at("lhs"));
        ce.rhs = value_from_json(c.at("rhs"));
        if (c.contains("structure")) {
            ce.structure = c.at("structure").get<std::string>();
        }
        r.counterexample = std::move(ce);
    }
    if (j.contains("note")) {
        r.note = j.at("note").get<std::string>();
    }
    return r;
}

std::string csv_header() { return "n,k,r,coefficients"; }

std::string to_csv_row(const FamilyRow& row)
{
    std::ostringstream out;
    out << row.n << ',';
    if (row.k >= 0) {
        out << row.k;
    }
    out << ',';
    if (row.r >= 0) {
        out << row.r;
    }
    out << ',';
    if (const auto* q = std::get_if<QPoly>(&row.value)) {
        bool first = true;
        for (const auto& c : q->coeffs()) {
            out << (first ? "" : " ") << c;
            first = false;
        }
    } else {
        bool first = true;
        for (const auto& [e, c] : std::get<MPoly>(row.value).terms()) {
            out << (first ? "" : ";") << e[0] << ' ' << e[1] << ' ' << e[2] << ' ' << e[3] << ':' << c;
            first = false;
        }
    }
    return out.str();
}

std::string value_text(const Value& v)
{
    return std::visit(
        [](const auto& x) -> std::string {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, BigInt>) {
                return to_string(x);
            } else {
                return x.to_string();
            }
        },
        v);
}

std::string to_text(const FamilyRow& row)
{
    std::ostringstream out;
    out << family_name(row.family) << " n=" << row.n;
    if (row.k >= 0) {
        out << " k=" << row.k;
    }
    if (row.r >= 0) {
        out << " r=" << row.r;
    }
    out << ": " << std::visit([](const auto& v) { return v.to_string(); }, row.value);
    return out.str();
}

std::string summary_line(const IdentityReport& r)
{
    std::ostringstream out;
    const char* tag = r.status == Status::pass ? "PASS" : r.status == Status::fail ? "FAIL" : "SKIP";
    out << tag << "  " << r.identity << "  cells=" << r.cells_checked;
    if (r.counterexample) {
        out << "  at";
        for (const auto& [k, v] : r.counterexample->params) {
            out << ' ' << k << '=' << v;
        }
        out << ": lhs=" << value_text(r.counterexample->lhs) << " rhs=" << value_text(r.counterexample->rhs);
        if (r.counterexample->structure) {
            out << " structure=" << *r.counterexample->structure;
        }
    }
    return out.str();
}

} // namespace qcomb
