#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "credal/compose.hpp"
#include "credal/credal.hpp"
#include "credal/io.hpp"
#include "credal/polytope.hpp"

namespace py = pybind11;

namespace {

using VariableSpec = std::vector<std::pair<std::string, std::vector<std::string>>>;

credal::Scope make_scope(const VariableSpec& spec) {
    std::vector<credal::Variable> vars;
    for (const auto& [name, levels] : spec) vars.push_back({name, levels});
    return credal::Scope(std::move(vars));
}

credal::Rational to_rational(const py::handle& h, const std::string& where) {
    if (py::isinstance<py::str>(h)) return credal::Rational::parse(h.cast<std::string>());
    if (py::isinstance<py::int_>(h)) return credal::Rational(h.cast<long>());
    throw credal::ParseError(where + ": pass exact numbers as strings or ints, not floats");
}

credal::CredalSet make_set(const VariableSpec& spec, const py::sequence& rows) {
    std::vector<credal::Point> pts;
    for (py::size_t r = 0; r < rows.size(); ++r) {
        credal::Point p;
        for (const py::handle& cell : rows[r].cast<py::sequence>())
            p.push_back(to_rational(cell, "vertices[" + std::to_string(r) + "]"));
        pts.push_back(std::move(p));
    }
    return credal::CredalSet(make_scope(spec), std::move(pts));
}

credal::CredalSet from_document(credal::CredalDocument doc) {
    if (doc.set) return *std::move(doc.set);
    return credal::CredalSet(doc.scope, credal::h_to_v(*doc.system));
}

std::vector<std::vector<std::string>> vertex_strings(const credal::CredalSet& m) {
    std::vector<std::vector<std::string>> out;
    for (const auto& p : m.hull().points) {
        std::vector<std::string> row;
        for (const auto& c : p) row.push_back(c.str());
        out.push_back(std::move(row));
    }
    return out;
}

credal::Distribution single_row(const credal::CredalSet& m, const char* what) {
    if (m.hull().points.size() != 1)
        throw credal::InvariantViolationError(std::string(what) +
                                              " must be a singleton credal set");
    return credal::Distribution(m.scope(), m.hull().points[0]);
}

}  // namespace

PYBIND11_MODULE(credalkit, m) {
    m.doc() = "Exact credal-set calculus: polytopes of distributions and their composition";

    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const credal::Error& e) {
            PyErr_SetString(PyExc_ValueError,
                            (std::string("[") + credal::error_code_name(e.code()) + "] " + e.what())
                                .c_str());
        }
    });

    py::class_<credal::CredalSet>(m, "CredalSet")
        .def(py::init(&make_set), py::arg("variables"), py::arg("vertices"),
             "Build from [(name, levels), ...] and rows of exact number strings/ints")
        .def_property_readonly("variables",
                               [](const credal::CredalSet& s) {
                                   VariableSpec out;
                                   for (const auto& v : s.scope().variables())
                                       out.emplace_back(v.name, v.levels);
                                   return out;
                               })
        .def_property_readonly("vertices", &vertex_strings,
                               "Canonical extreme points as exact strings")
        .def(
            "to_json",
            [](const credal::CredalSet& s, std::optional<int> digits) {
                return credal::emit_credal(s, digits);
            },
            py::arg("digits") = py::none())
        .def("__len__", [](const credal::CredalSet& s) { return s.hull().points.size(); })
        .def("__repr__", [](const credal::CredalSet& s) {
            std::string names;
            for (const auto& v : s.scope().variables()) {
                if (!names.empty()) names += ",";
                names += v.name;
            }
            return "CredalSet(scope=[" + names + "], vertices=" +
                   std::to_string(s.hull().points.size()) + ")";
        });

    m.def("parse", [](const std::string& text) { return from_document(credal::parse_credal(text)); },
          "Parse a credal JSON file (V or H) into a CredalSet");
    m.def("compose",
          [](const credal::CredalSet& a, const credal::CredalSet& b) {
              return credal::compose(a, b);
          });
    m.def("marginalize", [](const credal::CredalSet& s, const std::vector<std::string>& names) {
        return credal::marginalize(s, credal::sub_scope(s.scope(), names));
    });
    m.def("extend", [](const credal::CredalSet& s, const VariableSpec& target) {
        return credal::vacuous_extend(s, make_scope(target));
    });
    m.def("is_projective", &credal::is_projective);
    m.def("commutes", &credal::commutes);
    m.def("strong_product", &credal::strong_product);
    m.def("equal", [](const credal::CredalSet& a, const credal::CredalSet& b) {
        if (!(a.scope() == b.scope()))
            throw credal::ScopeMismatchError("equal requires identical scopes");
        return credal::equal(a.hull(), b.hull());
    });
    m.def("abs_continuous", [](const credal::CredalSet& p, const credal::CredalSet& q) {
        return credal::abs_continuous(single_row(p, "P"), single_row(q, "Q"));
    });
    m.def(
        "project",
        [](const py::sequence& point, const credal::CredalSet& s) {
            credal::Point x;
            for (const py::handle& cell : point) x.push_back(to_rational(cell, "point"));
            credal::Point pr = credal::euclidean_project(x, s.hull());
            std::vector<std::string> out;
            for (const auto& c : pr) out.push_back(c.str());
            return out;
        },
        py::arg("point"), py::arg("set"),
        "Exact Euclidean projection of a point (exact strings/ints) onto the set");
}
