#include "adinvar/cli.hpp"
#include "adinvar/corpus.hpp"
#include "adinvar/error.hpp"
#include "adinvar/io.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using adinvar::json;

namespace {

py::object to_py(const json& j) {
    switch (j.type()) {
    case json::value_t::null:
        return py::none();
    case json::value_t::boolean:
        return py::bool_(j.get<bool>());
    case json::value_t::number_integer:
        return py::int_(j.get<std::int64_t>());
    case json::value_t::number_unsigned:
        return py::int_(j.get<std::uint64_t>());
    case json::value_t::number_float:
        return py::float_(j.get<double>());
    case json::value_t::string:
        return py::str(j.get<std::string>());
    case json::value_t::array: {
        py::list l;
        for (const auto& e : j)
            l.append(to_py(e));
        return l;
    }
    case json::value_t::object: {
        py::dict d;
        for (auto it = j.begin(); it != j.end(); ++it)
            d[py::str(it.key())] = to_py(it.value());
        return d;
    }
    default:
        throw adinvar::Error(adinvar::ErrorKind::invalid_input, "unsupported JSON value");
    }
}

json from_py(const py::handle& o) {
    if (o.is_none())
        return nullptr;
    if (py::isinstance<py::bool_>(o))
        return o.cast<bool>();
    if (py::isinstance<py::int_>(o))
        return o.cast<std::int64_t>();
    if (py::isinstance<py::float_>(o))
        return o.cast<double>();
    if (py::isinstance<py::str>(o))
        return o.cast<std::string>();
    if (py::isinstance<py::dict>(o)) {
        json j = json::object();
        for (const auto& [k, v] : o.cast<py::dict>())
            j[py::str(k).cast<std::string>()] = from_py(v);
        return j;
    }
    if (py::isinstance<py::list>(o) || py::isinstance<py::tuple>(o)) {
        json j = json::array();
        for (const auto& v : o)
            j.push_back(from_py(v));
        return j;
    }
    // fractions.Fraction and similar: serialize through str()
    return py::str(o).cast<std::string>();
}

adinvar::Input input(const py::object& doc, const std::string& base_dir, const std::string& source) {
    return adinvar::Input{from_py(doc), base_dir, source};
}

}  // namespace

PYBIND11_MODULE(_adinvar, m) {
    m.doc() = "Exact workbench for naturally reductive metric Lie algebras G(d)";

    py::register_exception<adinvar::Error>(m, "AdinvarError");

    m.def("corpus_list", &adinvar::corpus_list, "Names of the built-in examples");
    m.def(
        "corpus_report", [](const std::string& name) { return to_py(adinvar::corpus_report(name).to_json()); },
        py::arg("name"), "Build a corpus entry and return its verification report");
    m.def(
        "corpus_builder", [](const std::string& name) { return to_py(adinvar::builder_to_json(adinvar::corpus_entry(name).data)); },
        py::arg("name"), "Builder document (d, h, pi) of a corpus entry");

    const auto bind_builder = [&m](const char* name, adinvar::Report (*fn)(const adinvar::Input&), const char* doc) {
        m.def(
            name,
            [fn](const py::object& d, const std::string& base_dir, const std::string& source) {
                return to_py(fn(input(d, base_dir, source)).to_json());
            },
            py::arg("doc"), py::arg("base_dir") = ".", py::arg("source") = "input", doc);
    };
    bind_builder("check", &adinvar::check_report, "Jacobi check and profile of an algebra document");
    bind_builder("extend", &adinvar::extend_report, "Double extension h + d + h* of a builder document");
    bind_builder("gd", &adinvar::gd_report, "G(d) = d + h* of a builder document");
    bind_builder("geometry", &adinvar::geometry_report, "Connection, curvature, Ricci and sectional data");
    bind_builder("verify_as", &adinvar::verify_as_report, "Homogeneous structure axioms on G(d)");
    bind_builder("series", &adinvar::series_report, "Predicted and computed solvable/nilpotent steps");

    m.def(
        "derivations",
        [](const py::object& algebra, const py::object& metric, const py::object& so_aut, const std::string& base_dir) {
            const adinvar::Input a = input(algebra, base_dir, "algebra");
            std::optional<adinvar::Input> mi, si;
            if (!metric.is_none())
                mi = input(metric, base_dir, "metric");
            if (!so_aut.is_none())
                si = input(so_aut, base_dir, "so_aut");
            return to_py(adinvar::derivations_report(a, mi ? &*mi : nullptr, si ? &*si : nullptr).to_json());
        },
        py::arg("algebra"), py::arg("metric") = py::none(), py::arg("so_aut") = py::none(), py::arg("base_dir") = ".",
        "Derivation, inner, skew and orthogonal-automorphism algebras");

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            const int code = adinvar::run_cli(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Run the command-line front end in process; returns (exit_code, stdout, stderr)");
}
