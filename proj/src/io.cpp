#include "credal/io.hpp"

#include <json.hpp>

#include <cstdint>
#include <set>
#include <utility>

namespace credal {

namespace {

using json = nlohmann::ordered_json;

Rational parse_number(const json& v, const std::string& where) {
    if (v.is_string()) {
        try {
            return Rational::parse(v.get<std::string>());
        } catch (const Error& e) {
            throw ParseError(where + ": " + e.what());
        }
    }
    if (v.is_number_integer() && !v.is_number_float()) {
        if (v.is_number_unsigned()) {
            const auto u = v.get<std::uint64_t>();
            if (u > static_cast<std::uint64_t>(INT64_MAX))
                throw ParseError(where + ": integer too large, use a string");
            return Rational(mpq_class(mpz_class(std::to_string(u), 10)));
        }
        return Rational(mpq_class(mpz_class(std::to_string(v.get<std::int64_t>()), 10)));
    }
    if (v.is_number_float())
        throw ParseError(where +
                         ": floating-point literals are inexact, write the number as a string");
    throw ParseError(where + ": expected an exact number string");
}

const json& require_field(const json& obj, const char* key) {
    auto it = obj.find(key);
    if (it == obj.end()) throw ParseError(std::string("missing field \"") + key + "\"");
    return *it;
}

std::string num_str(const Rational& r, std::optional<int> digits) {
    return digits ? r.str_rounded(*digits) : r.str();
}

json row_json(const Point& p, std::optional<int> digits) {
    json row = json::array();
    for (const auto& c : p) row.push_back(num_str(c, digits));
    return row;
}

json credal_json(const CredalSet& m, std::optional<int> digits) {
    json doc;
    json vars = json::array();
    for (const auto& v : m.scope().variables())
        vars.push_back(json{{"name", v.name}, {"levels", v.levels}});
    doc["variables"] = std::move(vars);
    json names = json::array();
    for (const auto& v : m.scope().variables()) names.push_back(v.name);
    doc["scope"] = std::move(names);
    doc["representation"] = "V";
    json rows = json::array();
    for (const auto& p : m.hull().points) rows.push_back(row_json(p, digits));
    doc["vertices"] = std::move(rows);
    return doc;
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

}  // namespace

CredalDocument parse_credal(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("top-level value must be an object");

    const json& jvars = require_field(doc, "variables");
    if (!jvars.is_array() || jvars.empty())
        throw ParseError("\"variables\" must be a nonempty array");
    std::vector<Variable> declared;
    std::set<std::string> names;
    for (std::size_t i = 0; i < jvars.size(); ++i) {
        const json& jv = jvars[i];
        const std::string where = "variables[" + std::to_string(i) + "]";
        if (!jv.is_object()) throw ParseError(where + " must be an object");
        const json& jname = require_field(jv, "name");
        const json& jlevels = require_field(jv, "levels");
        if (!jname.is_string()) throw ParseError(where + ".name must be a string");
        if (!jlevels.is_array() || jlevels.empty())
            throw ParseError(where + ".levels must be a nonempty array");
        Variable v;
        v.name = jname.get<std::string>();
        for (const json& jl : jlevels) {
            if (!jl.is_string()) throw ParseError(where + ".levels must contain strings");
            v.levels.push_back(jl.get<std::string>());
        }
        if (!names.insert(v.name).second)
            throw ParseError(where + ": duplicate variable \"" + v.name + "\"");
        std::set<std::string> lv(v.levels.begin(), v.levels.end());
        if (lv.size() != v.levels.size())
            throw ParseError(where + ": duplicate level in \"" + v.name + "\"");
        declared.push_back(std::move(v));
    }
    const Scope all(declared);

    const json& jscope = require_field(doc, "scope");
    if (!jscope.is_array()) throw ParseError("\"scope\" must be an array of variable names");
    std::vector<std::string> scope_names;
    std::set<std::string> seen;
    for (std::size_t i = 0; i < jscope.size(); ++i) {
        if (!jscope[i].is_string())
            throw ParseError("scope[" + std::to_string(i) + "] must be a string");
        std::string n = jscope[i].get<std::string>();
        if (all.index_of(n) == Scope::npos)
            throw ParseError("scope[" + std::to_string(i) + "]: undeclared variable \"" + n + "\"");
        if (!seen.insert(n).second)
            throw ParseError("scope[" + std::to_string(i) + "]: duplicate variable \"" + n + "\"");
        scope_names.push_back(std::move(n));
    }

    CredalDocument out;
    out.declared = all;
    out.scope = sub_scope(all, scope_names);
    const int width = out.scope.cell_count();

    const json& jrep = require_field(doc, "representation");
    if (!jrep.is_string() || (jrep != "V" && jrep != "H"))
        throw ParseError("\"representation\" must be \"V\" or \"H\"");

    if (jrep == "V") {
        const json& jrows = require_field(doc, "vertices");
        if (!jrows.is_array() || jrows.empty())
            throw ParseError("\"vertices\" must be a nonempty array of rows");
        std::vector<Point> rows;
        for (std::size_t r = 0; r < jrows.size(); ++r) {
            const std::string rw = "vertices[" + std::to_string(r) + "]";
            if (!jrows[r].is_array()) throw ParseError(rw + " must be an array");
            if (static_cast<int>(jrows[r].size()) != width)
                throw ParseError(rw + " has " + std::to_string(jrows[r].size()) +
                                 " entries, scope has " + std::to_string(width) + " cells");
            Point p;
            Rational sum(0);
            for (std::size_t c = 0; c < jrows[r].size(); ++c) {
                Rational v =
                    parse_number(jrows[r][c], rw + "[" + std::to_string(c) + "]");
                if (v.sign() < 0)
                    throw InvariantViolationError(rw + "[" + std::to_string(c) +
                                                  "]: negative mass " + v.str());
                sum += v;
                p.push_back(std::move(v));
            }
            if (!(sum == Rational(1)))
                throw InvariantViolationError(rw + ": masses sum to " + sum.str() +
                                              ", expected 1");
            rows.push_back(std::move(p));
        }
        out.set.emplace(out.scope, std::move(rows));
    } else {
        const json& jcons = require_field(doc, "constraints");
        if (!jcons.is_array()) throw ParseError("\"constraints\" must be an array");
        HalfspaceSystem sys;
        sys.dim = width;
        for (std::size_t r = 0; r < jcons.size(); ++r) {
            const std::string rw = "constraints[" + std::to_string(r) + "]";
            const json& jc = jcons[r];
            if (!jc.is_object()) throw ParseError(rw + " must be an object");
            const json& jnormal = require_field(jc, "normal");
            const json& jrel = require_field(jc, "relation");
            const json& joffset = require_field(jc, "offset");
            if (!jnormal.is_array() || static_cast<int>(jnormal.size()) != width)
                throw ParseError(rw + ".normal must be an array of " + std::to_string(width) +
                                 " entries");
            if (!jrel.is_string() || (jrel != "<=" && jrel != "="))
                throw ParseError(rw + ".relation must be \"<=\" or \"=\"");
            Constraint c;
            for (std::size_t k = 0; k < jnormal.size(); ++k)
                c.normal.push_back(
                    parse_number(jnormal[k], rw + ".normal[" + std::to_string(k) + "]"));
            c.offset = parse_number(joffset, rw + ".offset");
            (jrel == "=" ? sys.equalities : sys.inequalities).push_back(std::move(c));
        }
        out.system = std::move(sys);
    }
    return out;
}

std::string emit_credal(const CredalSet& m, std::optional<int> digits) {
    return dump(credal_json(m, digits));
}

std::string emit_credal(const Scope& scope, const HalfspaceSystem& h) {
    if (h.dim != scope.cell_count())
        throw DimensionMismatchError("system dimension " + std::to_string(h.dim) +
                                     " does not match the scope's " +
                                     std::to_string(scope.cell_count()) + " cells");
    json doc;
    json vars = json::array();
    for (const auto& v : scope.variables())
        vars.push_back(json{{"name", v.name}, {"levels", v.levels}});
    doc["variables"] = std::move(vars);
    json names = json::array();
    for (const auto& v : scope.variables()) names.push_back(v.name);
    doc["scope"] = std::move(names);
    doc["representation"] = "H";
    json rows = json::array();
    auto emit_row = [&rows](const Constraint& c, const char* rel) {
        json jc;
        jc["normal"] = row_json(c.normal, std::nullopt);
        jc["relation"] = rel;
        jc["offset"] = c.offset.str();
        rows.push_back(std::move(jc));
    };
    for (const auto& c : h.equalities) emit_row(c, "=");
    for (const auto& c : h.inequalities) emit_row(c, "<=");
    doc["constraints"] = std::move(rows);
    return dump(doc);
}

std::string emit_trace(const CompositionTrace& t, std::optional<int> digits) {
    json doc;
    auto set_or_empty = [&](const std::optional<CredalSet>& s) -> json {
        if (!s) return json("EMPTY");
        return credal_json(*s, digits);
    };
    doc["core"] = set_or_empty(t.core);
    doc["m1_projective"] = set_or_empty(t.m1_projective);
    doc["m2_projective"] = set_or_empty(t.m2_projective);
    json pairs = json::array();
    for (const auto& [p1, p2] : t.projective_pairs) {
        json jp;
        jp["p1"] = row_json(p1.masses, digits);
        jp["p2"] = row_json(p2.masses, digits);
        pairs.push_back(std::move(jp));
    }
    doc["projective_pairs"] = std::move(pairs);
    json recs = json::array();
    for (const auto& rec : t.projection_records) {
        json jr;
        jr["p1"] = row_json(rec.p1.masses, digits);
        jr["q2"] = row_json(rec.q2.masses, digits);
        jr["rule"] = std::string(1, rec.rule);
        recs.push_back(std::move(jr));
    }
    doc["projection_records"] = std::move(recs);
    doc["result"] = set_or_empty(t.result);
    return dump(doc);
}

}  // namespace credal
