#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "rackmod/cli.hpp"
#include "rackmod/enumerate.hpp"
#include "rackmod/io.hpp"

namespace py = pybind11;
using namespace rackmod;

namespace {

Grid to_grid(const std::vector<std::vector<Elem>>& rows) { return Grid::from_rows(rows); }

std::vector<std::vector<Elem>> rows_of(const Grid& g) { return g.to_rows(); }

py::dict report_dict(const ValidationReport& r) {
  py::list violations;
  for (const auto& v : r.violations()) violations.append(py::make_tuple(v.rule, v.witness));
  py::dict d;
  d["valid"] = r.valid();
  d["violations"] = violations;
  d["total"] = r.total();
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Finite racks, crossed modules of racks and their invariants.";

  py::register_exception<MalformedInput>(m, "MalformedInput", PyExc_ValueError);
  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);

  py::class_<Rack>(m, "Rack")
      .def(py::init([](const std::vector<std::vector<Elem>>& table, std::optional<Elem> basepoint) {
             return Rack(to_grid(table), basepoint);
           }),
           py::arg("table"), py::arg("basepoint") = py::none())
      .def_property_readonly("size", &Rack::size)
      .def_property_readonly("basepoint", &Rack::basepoint)
      .def_property_readonly("table", [](const Rack& r) { return rows_of(r.table()); })
      .def("op", &Rack::op)
      .def("is_quandle", &Rack::is_quandle)
      .def("to_json", [](const Rack& r) { return io::to_json(r).dump(); })
      .def("__eq__", [](const Rack& a, const Rack& b) { return a == b; })
      .def("__repr__", [](const Rack& r) { return "<Rack of order " + std::to_string(r.size()) + ">"; });

  m.def("validate_rack",
        [](const std::vector<std::vector<Elem>>& table, std::optional<Elem> basepoint) {
          return report_dict(validate_rack(to_grid(table), basepoint));
        },
        py::arg("table"), py::arg("basepoint") = py::none());
  m.def("named_rack", &io::named_rack, py::arg("spec"));
  m.def("conj_rack", [](const std::string& group) { return conj_rack(io::named_group(group)); }, py::arg("group"));
  m.def("orbits", &orbits);
  m.def("rack_from_json", [](const std::string& text) { return io::rack_from_json(io::Json::parse(text)); });

  m.def("enumerate_racks",
        [](std::size_t n, const std::string& flavor, unsigned jobs) {
          EnumerateOptions options;
          options.jobs = jobs;
          return enumerate_racks(n, parse_flavor(flavor), options).representatives;
        },
        py::arg("n"), py::arg("flavor") = "racks", py::arg("jobs") = 1u);

  m.def("abelianization",
        [](const Rack& r) {
          const auto ab = abelianization(as_presentation(r));
          std::vector<std::string> torsion;
          for (const auto& t : ab.torsion) torsion.push_back(t.str());
          return py::make_tuple(ab.rank, torsion);
        },
        "(rank, torsion) of the abelianized associated group");

  m.def("word_equality",
        [](const Rack& r, const Word& w1, const Word& w2, std::size_t budget) {
          WordEqualityOptions options;
          options.budget = budget;
          return std::string(verdict_name(word_equality(as_presentation(r), w1, w2, options).verdict));
        },
        py::arg("rack"), py::arg("w1"), py::arg("w2"), py::arg("budget") = 100000);

  m.def("betti_numbers",
        [](const Rack& r, std::size_t dim) {
          std::vector<std::size_t> out;
          for (const auto& h : homology(nerve(r, dim))) out.push_back(h.betti);
          return out;
        },
        py::arg("rack"), py::arg("dim") = 3);

  m.def("count_colorings",
        [](const std::string& diagram, const Rack& r) {
          const auto d = diagram.rfind("PD", 0) == 0 || diagram.rfind("X[", 0) == 0 ? parse_pd(diagram)
                                                                                      : bundled_diagram(diagram);
          return count_colorings(fundamental_rack_presentation(d), r);
        },
        py::arg("diagram"), py::arg("rack"), "Diagram is a bundled name or a PD code.");

  m.def("run_cli",
        [](std::vector<std::string> args) {
          args.insert(args.begin(), "rackmod");
          std::ostringstream out, err;
          const int code = cli::run(args, out, err);
          return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Returns (exit_code, stdout, stderr).");
}
