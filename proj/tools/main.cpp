// photonpos: verify operator identities of the photon position problem,
// inspect operators, and evaluate them on test wavefunctions.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "photonpos/report.hpp"

namespace {

using namespace photonpos;

int find_exact(const std::vector<NamedOperator>& reg, const std::string& name) {
  for (std::size_t k = 0; k < reg.size(); ++k)
    if (reg[k].name == name) return int(k);
  return -1;
}

void print_catalog(std::ostream& os, const std::vector<NamedOperator>& reg) {
  os << "known operators:\n";
  for (const auto& e : reg) os << "  " << e.name << "\n";
  os << "known wavefunctions:\n";
  for (const auto& w : wavefn_catalog()) os << "  " << w.name << "\n";
}

bool parse_point(std::string text, Point& pt) {
  if (!text.empty() && text.front() == '(') text.erase(0, 1);
  if (!text.empty() && text.back() == ')') text.pop_back();
  double v[3];
  int consumed = 0;
  if (std::sscanf(text.c_str(), "%lf,%lf,%lf%n", &v[0], &v[1], &v[2],
                  &consumed) != 3 ||
      consumed != int(text.size()))
    return false;
  pt = {v[0], v[1], v[2]};
  return true;
}

int cmd_verify(const VerifierConfig& cfg, const ReportFilter& filter,
               const std::string& format) {
  const ReportDocument doc = full_report(cfg, filter);
  if (format == "summary")
    std::cout << render_summary(doc);
  else
    std::cout << render_structured(doc);
  return doc.success ? 0 : 1;
}

int cmd_show(const std::string& name) {
  const OperatorCatalog cat = OperatorCatalog::build();
  const auto reg = operator_registry(cat);
  if (int k = find_exact(reg, name); k >= 0) {
    std::cout << reg[k].name << "\n" << show(reg[k].op);
    return 0;
  }
  for (const auto& [family, members] : operator_groups()) {
    if (family != name) continue;
    for (const auto& member : members) {
      const int k = find_exact(reg, member);
      if (k < 0) continue;
      std::cout << reg[k].name << "\n" << show(reg[k].op) << "\n";
    }
    return 0;
  }
  std::cerr << "unknown operator: " << name << "\n";
  print_catalog(std::cerr, reg);
  return 2;
}

int cmd_eval(const std::string& name, const std::string& point_text,
             const std::string& wavefn_name) {
  const OperatorCatalog cat = OperatorCatalog::build();
  const auto reg = operator_registry(cat);
  const int k = find_exact(reg, name);
  if (k < 0) {
    std::cerr << "unknown operator: " << name
              << " (component names are required here, e.g. hawton-1)\n";
    print_catalog(std::cerr, reg);
    return 2;
  }
  const WaveFn* f = find_wavefn(wavefn_name);
  if (!f) {
    std::cerr << "unknown wavefunction: " << wavefn_name << "\n";
    print_catalog(std::cerr, reg);
    return 2;
  }
  Point pt;
  if (!parse_point(point_text, pt)) {
    std::cerr << "cannot parse point '" << point_text
              << "'; expected x,y,z or (x,y,z)\n";
    return 2;
  }
  try {
    const auto value = eval(apply(reg[k].op, *f), pt);
    auto fmt = [](Complex z) {
      char buf[80];
      std::snprintf(buf, sizeof buf, "%.12g%+.12gi", z.real(), z.imag());
      return std::string(buf);
    };
    std::cout << "(" << fmt(value[0]) << ", " << fmt(value[1]) << ", "
              << fmt(value[2]) << ")\n";
    return 0;
  } catch (const SingularPointError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"operator-identity verification for photon position operators"};
  app.require_subcommand(1);

  VerifierConfig cfg;
  ReportFilter filter;
  std::string format = "structured";
  std::pair<double, double> shell{cfg.shell_min, cfg.shell_max};

  auto* verify = app.add_subcommand("verify", "run identity suites");
  verify->add_option("--seed", cfg.seed, "global random seed");
  verify->add_option("--samples", cfg.samples, "sample points per condition")
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--tol", cfg.tolerance, "zero-test tolerance")
      ->check(CLI::PositiveNumber);
  verify->add_option("--shell", shell,
                     "sampling shell r_min,r_max in momentum units");
  verify->add_option("--axis-margin", cfg.axis_margin,
                     "minimum rho/r of sample points")
      ->check(CLI::Range(1e-12, 0.999999));
  verify
      ->add_option("--suite", filter.suite,
                   "suite name (lie_algebra, helicity, pauli_lubanski, "
                   "position, rotation_witness, subspace_invariance, "
                   "hawton_identities, adjoint, engine_oracle) or all")
      ->check(CLI::IsMember({"all", "lie_algebra", "helicity",
                             "pauli_lubanski", "position", "rotation_witness",
                             "subspace_invariance", "hawton_identities",
                             "adjoint", "engine_oracle"}));
  verify->add_option("--rep", filter.representation,
                     "representation filter")
      ->check(CLI::IsMember(
          {"all", "original", "auxiliary", "hat", "tilde", "catalog"}));
  verify->add_option("--operator", filter.op, "position-operator filter")
      ->check(CLI::IsMember({"all", "pryce", "hawton"}));
  verify->add_option("--format", format, "structured | summary")
      ->check(CLI::IsMember({"structured", "summary"}));

  std::string show_name;
  auto* show_cmd = app.add_subcommand("show", "pretty-print an operator");
  show_cmd->add_option("name", show_name, "operator or family name")
      ->required();

  std::string eval_name, eval_point, eval_wavefn;
  auto* eval_cmd = app.add_subcommand(
      "eval", "apply an operator to a catalog wavefunction at a point");
  eval_cmd->add_option("operator", eval_name, "operator component name")
      ->required();
  eval_cmd->add_option("point", eval_point, "evaluation point x,y,z")
      ->required();
  eval_cmd->add_option("wavefn", eval_wavefn, "catalog wavefunction name")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  cfg.shell_min = shell.first;
  cfg.shell_max = shell.second;
  if (!(cfg.shell_min > 0.0) || !(cfg.shell_max >= cfg.shell_min)) {
    std::cerr << "invalid shell: need 0 < r_min <= r_max\n";
    return 2;
  }

  if (verify->parsed()) return cmd_verify(cfg, filter, format);
  if (show_cmd->parsed()) return cmd_show(show_name);
  if (eval_cmd->parsed()) return cmd_eval(eval_name, eval_point, eval_wavefn);
  return 2;
}
