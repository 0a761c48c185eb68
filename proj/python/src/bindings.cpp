#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "photonpos/report.hpp"

namespace py = pybind11;
using namespace photonpos;

namespace {

std::string show_by_name(const std::string& name) {
  const OperatorCatalog cat = OperatorCatalog::build();
  const auto reg = operator_registry(cat);
  for (const auto& e : reg)
    if (e.name == name) return show(e.op);
  for (const auto& [family, members] : operator_groups()) {
    if (family != name) continue;
    std::string out;
    for (const auto& member : members)
      for (const auto& e : reg)
        if (e.name == member) out += member + "\n" + show(e.op) + "\n";
    return out;
  }
  throw py::key_error("unknown operator: " + name);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "verification of photon position operator identities";
  m.attr("__version__") = "0.1.0";

  m.def(
      "verify_json",
      [](std::uint64_t seed, int samples, double tol, double shell_min,
         double shell_max, double axis_margin, const std::string& suite,
         const std::string& rep, const std::string& op) {
        VerifierConfig cfg;
        cfg.seed = seed;
        cfg.samples = samples;
        cfg.tolerance = tol;
        cfg.shell_min = shell_min;
        cfg.shell_max = shell_max;
        cfg.axis_margin = axis_margin;
        ReportFilter filter{suite, rep, op};
        return render_structured(full_report(cfg, filter));
      },
      py::arg("seed") = 0, py::arg("samples") = 64, py::arg("tol") = 1e-9,
      py::arg("shell_min") = 0.5, py::arg("shell_max") = 2.0,
      py::arg("axis_margin") = 0.1, py::arg("suite") = "all",
      py::arg("rep") = "all", py::arg("op") = "all",
      "Run the verification suites and return the structured report as a "
      "JSON string.");

  m.def("show", &show_by_name, py::arg("name"),
        "Pretty-print an operator or operator family.");

  m.def(
      "eval_operator",
      [](const std::string& name, const Point& point,
         const std::string& wavefn) {
        const OperatorCatalog cat = OperatorCatalog::build();
        for (const auto& e : operator_registry(cat)) {
          if (e.name != name) continue;
          const WaveFn* f = find_wavefn(wavefn);
          if (!f) throw py::key_error("unknown wavefunction: " + wavefn);
          return eval(apply(e.op, *f), point);
        }
        throw py::key_error("unknown operator: " + name);
      },
      py::arg("name"), py::arg("point"), py::arg("wavefn"),
      "Apply an operator to a catalog wavefunction and evaluate at a point.");

  m.def("operator_names", [] {
    const OperatorCatalog cat = OperatorCatalog::build();
    std::vector<std::string> names;
    for (const auto& e : operator_registry(cat)) names.push_back(e.name);
    return names;
  });

  m.def("wavefn_names", [] {
    std::vector<std::string> names;
    for (const auto& w : wavefn_catalog()) names.push_back(w.name);
    return names;
  });

  m.def(
      "sample_points",
      [](std::uint64_t seed, int count, double r_min, double r_max,
         double axis_margin) {
        SamplePlan plan{seed, count, r_min, r_max, axis_margin};
        return sample_points(plan);
      },
      py::arg("seed") = 0, py::arg("count") = 64, py::arg("r_min") = 0.5,
      py::arg("r_max") = 2.0, py::arg("axis_margin") = 0.1);
}
