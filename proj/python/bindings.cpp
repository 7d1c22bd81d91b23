#include <sstream>

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rkb/cli.hpp"
#include "rkb/errors.hpp"
#include "rkb/julia.hpp"
#include "rkb/report_io.hpp"
#include "rkb/zeta.hpp"
#include "rkb/zoo.hpp"

namespace py = pybind11;
using namespace rkb;

namespace {

Point to_point(const py::object& obj) {
  if (py::isinstance<py::str>(obj)) return zoo::parse_point(obj.cast<std::string>());
  if (py::isinstance<py::sequence>(obj)) return Point(obj.cast<std::vector<cplx>>());
  return Point(obj.cast<cplx>());
}

py::object to_python(const io::json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

}  // namespace

PYBIND11_MODULE(_rkb, m) {
  m.doc() = "Reproducing-kernel boundary numerics";

  py::register_exception<Error>(m, "RkbError");

  py::class_<Kernel>(m, "Kernel")
      .def_property_readonly("label", &Kernel::label)
      .def_property_readonly("domain", [](const Kernel& k) { return k.domain().name(); })
      .def("__call__", [](const Kernel& k, const py::object& x, const py::object& y) { return k(to_point(x), to_point(y)); })
      .def("__repr__", [](const Kernel& k) { return "<Kernel " + k.label() + ">"; });

  py::class_<SelfMap>(m, "SelfMap")
      .def_property_readonly("label", &SelfMap::label)
      .def("__call__", [](const SelfMap& f, const py::object& x) { return f(to_point(x)).coords; })
      .def("__repr__", [](const SelfMap& f) { return "<SelfMap " + f.label() + ">"; });

  m.def("kernel", &zoo::kernel_from_label, py::arg("label"));
  m.def("self_map", &zoo::map_from_label, py::arg("label"));
  m.def("kernel_labels", &zoo::kernel_labels);
  m.def("map_labels", &zoo::map_labels);
  m.def("zeta", &zeta_eval, py::arg("s"));
  m.def("nat_matrix_eval", &zoo::nat_matrix_eval);

  m.def("product", &product_kernel);
  m.def("power", &power_kernel);
  m.def("compose", &compose_kernel);
  m.def("quotient", &quotient_kernel);
  m.def("exp", &exp_kernel);

  m.def(
      "gram",
      [](const Kernel& k, const std::vector<py::object>& pts) {
        std::vector<Point> ps;
        for (const auto& p : pts) ps.push_back(to_point(p));
        return to_python(io::to_json(gram(k, make_sample(k.domain(), ps))));
      },
      py::arg("kernel"), py::arg("points"));

  m.def(
      "certify_factor",
      [](const Kernel& k, const Kernel& t, const SelfMap& phi, std::uint64_t seed) {
        EscalationPlan plan;
        plan.seed = seed;
        return to_python(io::to_json(certify_factor(k, t, phi, plan)));
      },
      py::arg("k"), py::arg("t"), py::arg("phi"), py::arg("seed") = 0);

  m.def(
      "jc_report",
      [](const Kernel& k, const Kernel& t, const SelfMap& phi, const py::object& xi, int N) {
        JCOptions opt;
        opt.N = N;
        return to_python(io::to_json(jc_report(k, t, phi, to_point(xi), opt)));
      },
      py::arg("k"), py::arg("t"), py::arg("phi"), py::arg("xi"), py::arg("N") = 30);

  m.def(
      "iterate",
      [](const Kernel& k, const SelfMap& phi, const py::object& x0, const py::object& xi, double c, int N) {
        const BoundaryPoint b = boundary_point(k, to_point(xi));
        return to_python(io::to_json(iterate_to_boundary(k, phi, to_point(x0), b, c, N)));
      },
      py::arg("k"), py::arg("phi"), py::arg("x0"), py::arg("xi"), py::arg("c"), py::arg("N") = 40);

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));
}
