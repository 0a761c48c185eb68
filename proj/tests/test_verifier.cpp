#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <numbers>

#include "doctest.h"
#include "json.hpp"
#include "photonpos/report.hpp"

using namespace photonpos;

namespace {

// small plans keep the unit suite quick; acceptance runs the full config
VerifierConfig small_config() {
  VerifierConfig cfg;
  cfg.samples = 16;
  return cfg;
}

const ConditionReport& find_condition(const std::vector<ConditionReport>& v,
                                      const std::string& needle) {
  for (const auto& c : v)
    if (c.condition.find(needle) != std::string::npos) return c;
  throw std::runtime_error("condition not found: " + needle);
}

bool close(Complex a, Complex b, double tol) {
  return std::abs(a - b) <= tol * (1.0 + std::abs(a) + std::abs(b));
}

}  // namespace

TEST_CASE("inner product estimates") {
  const WaveFn& gauss = *find_wavefn("gauss");
  const WaveFn& poly = *find_wavefn("poly-gauss");

  // analytic oracle: <gauss, gauss> = integral exp(-2 r^2) d^3p = (pi/2)^(3/2)
  // (the importance sampler matches this integrand exactly, so the standard
  // error collapses to rounding noise)
  const auto norm = inner_product(gauss, gauss, 99, 200000);
  const double exact = std::pow(std::numbers::pi / 2.0, 1.5);
  CHECK(std::abs(norm.value.real() - exact) < 5.0 * norm.std_error + 1e-9);
  CHECK(std::abs(norm.value.imag()) < 1e-12);

  // determinism
  const auto again = inner_product(gauss, gauss, 99, 200000);
  CHECK(again.value == norm.value);
  CHECK(again.std_error == norm.std_error);

  // sesquilinearity within noise
  const auto fg = inner_product(gauss, poly, 7, 100000);
  const auto gf = inner_product(poly, gauss, 7, 100000);
  CHECK(std::abs(fg.value - std::conj(gf.value)) <
        3.0 * (fg.std_error + gf.std_error) + 1e-10);

  // divergence guard
  const WaveFn undamped{ScalarExpr::var(1), ScalarExpr(), ScalarExpr()};
  CHECK_THROWS_AS(inner_product(undamped, gauss, 1, 100),
                  std::invalid_argument);
}

TEST_CASE("quadrature adjoint oracle") {
  const OperatorCatalog cat = OperatorCatalog::build();
  const WaveFn& f = *find_wavefn("gauss");
  const WaveFn& g = *find_wavefn("poly-gauss");

  // <g, Q1 f> = <Q1 g, f> to relative error 1e-2 at 1e5 samples
  const auto a = inner_product(g, apply(cat.Q[0], f), 11, 100000);
  const auto b = inner_product(apply(cat.Q[0], g), f, 11, 100000);
  CHECK(std::abs(a.value - b.value) <=
        1e-2 * (1.0 + std::abs(a.value) + std::abs(b.value)));

  // same oracle for L1 and the pryce components
  const auto la = inner_product(g, apply(cat.L[0], f), 13, 100000);
  const auto lb = inner_product(apply(cat.L[0], g), f, 13, 100000);
  CHECK(std::abs(la.value - lb.value) <=
        1e-2 * (1.0 + std::abs(la.value) + std::abs(lb.value)));

  const auto xa = inner_product(g, apply(cat.pryce[0], f), 17, 100000);
  const auto xb = inner_product(apply(cat.pryce[0], g), f, 17, 100000);
  CHECK(std::abs(xa.value - xb.value) <=
        1e-2 * (1.0 + std::abs(xa.value) + std::abs(xb.value)));
}

TEST_CASE("lie algebra suites pass in all four generator sets") {
  const OperatorCatalog cat = OperatorCatalog::build();
  const VerifierConfig cfg = small_config();
  for (const auto* rep :
       {&cat.original, &cat.auxiliary, &cat.hat, &cat.tilde}) {
    const auto reports = check_lie_algebra(*rep, cfg);
    CHECK(reports.size() == 9);
    for (const auto& r : reports) {
      INFO(rep->name << ": " << r.condition);
      CHECK(r.status == Status::kPass);
      CHECK(r.matches_expectation());
    }
  }
}

TEST_CASE("position condition outcomes per operator and representation") {
  const OperatorCatalog cat = OperatorCatalog::build();
  const VerifierConfig cfg = small_config();

  {
    const auto reports =
        check_position_conditions("pryce", cat.pryce, cat.original, cat, cfg);
    CHECK(find_condition(reports, "[J_i,X_j]").status == Status::kPass);
    CHECK(find_condition(reports, "[P_i,X_j]").status == Status::kPass);
    CHECK(find_condition(reports, "Pi X_i Pi").status == Status::kPass);
    CHECK(find_condition(reports, "Theta X_i Theta").status == Status::kPass);
    CHECK(find_condition(reports, "[X_i, Lambda^2]").status == Status::kPass);
    const auto& comm = find_condition(reports, "[X_i,X_j]");
    CHECK(comm.status == Status::kFail);
    CHECK(comm.expected == Expectation::kFail);
    REQUIRE(comm.witness.has_value());
    for (const auto& r : reports) CHECK(r.matches_expectation());
  }

  {
    const auto reports = check_position_conditions(
        "hawton", cat.hawton_closed, cat.original, cat, cfg);
    const auto& rot = find_condition(reports, "[J_i,X_j]");
    CHECK(rot.status == Status::kFail);
    CHECK(rot.expected == Expectation::kFail);
    REQUIRE(rot.witness.has_value());
    CHECK(find_condition(reports, "[P_i,X_j]").status == Status::kPass);
    CHECK(find_condition(reports, "Pi X_i Pi").expected ==
          Expectation::kInformational);
    CHECK(find_condition(reports, "[X_i, Lambda^2]").status == Status::kPass);
    CHECK(find_condition(reports, "[X_i,X_j]").status == Status::kPass);
    for (const auto& r : reports) CHECK(r.matches_expectation());
  }

  {
    const auto reports = check_position_conditions(
        "hawton", cat.hawton_closed, cat.hat, cat, cfg);
    CHECK(find_condition(reports, "[J_i,X_j]").status == Status::kPass);
    CHECK(find_condition(reports, "[P_i,X_j]").status == Status::kPass);
    const auto& par = find_condition(reports, "Pi X_i Pi");
    CHECK(par.status == Status::kPass);
    CHECK(par.note == "derived-from-twist");
    CHECK(find_condition(reports, "Theta X_i Theta").status == Status::kPass);
    CHECK(find_condition(reports, "[X_i, Lambda^2]").status ==
          Status::kVacuousPass);
    CHECK(find_condition(reports, "[X_i,X_j]").status == Status::kPass);
    for (const auto& r : reports) CHECK(r.matches_expectation());
  }

  {
    const auto reports = check_position_conditions(
        "hawton", cat.hawton_closed, cat.tilde, cat, cfg);
    CHECK(find_condition(reports, "[J_i,X_j]").status == Status::kPass);
    CHECK(find_condition(reports, "[P_i,X_j]").status == Status::kPass);
    const auto& hel = find_condition(reports, "[X_i, Lambda^2]");
    CHECK(hel.status == Status::kFail);
    CHECK(hel.expected == Expectation::kFail);
    REQUIRE(hel.witness.has_value());
    CHECK(find_condition(reports, "[X_i,X_j]").status == Status::kPass);
    for (const auto& r : reports) CHECK(r.matches_expectation());
  }
}

TEST_CASE("rotation witness matches the independent application oracle") {
  const OperatorCatalog cat = OperatorCatalog::build();
  const VerifierConfig cfg = small_config();

  const auto reports = check_rotation_witness(cat, cfg);
  const auto& main = find_condition(reports, "[M_1,hawton_1]");
  CHECK(main.status == Status::kFail);
  CHECK(main.expected == Expectation::kFail);
  REQUIRE(main.witness.has_value());
  CHECK(find_condition(reports, "[M_1,pryce_1]").status == Status::kPass);
  CHECK(find_condition(reports, "[P_1,hawton_1]").status == Status::kPass);

  // frozen oracle value at p = (1, 1, 1/2): the commutator applied to
  // f = (exp(-r^2), 0, 0) equals (0, e^{-9/4}/9, -2 e^{-9/4}/9)
  const WaveFn f = *find_wavefn("gauss");
  const Point pt{1.0, 1.0, 0.5};
  const Complex expected1{0.0, 0.0};
  const Complex expected2{std::exp(-2.25) / 9.0, 0.0};
  const Complex expected3{-2.0 * std::exp(-2.25) / 9.0, 0.0};

  // apply-twice difference, no closed-form commutator involved
  const WaveFn direct = apply(cat.M[0], apply(cat.hawton_closed[0], f)) -
                        apply(cat.hawton_closed[0], apply(cat.M[0], f));
  const auto dv = eval(direct, pt);
  CHECK(close(dv[0], expected1, 1e-11));
  CHECK(close(dv[1], expected2, 1e-11));
  CHECK(close(dv[2], expected3, 1e-11));

  // closed-form route agrees
  const auto cv =
      eval(apply(commutator(cat.M[0], cat.hawton_closed[0]), f), pt);
  for (int i = 0; i < 3; ++i) CHECK(close(cv[i], dv[i], 1e-11));

  // the pryce companion vanishes there
  const auto pv = eval(apply(commutator(cat.M[0], cat.pryce[0]), f), pt);
  for (int i = 0; i < 3; ++i) CHECK(std::abs(pv[i]) < 1e-11);
}

TEST_CASE("subspace invariance statuses") {
  const OperatorCatalog cat = OperatorCatalog::build();
  const auto reports = check_subspace_invariance(cat, small_config());
  CHECK(find_condition(reports, "pryce preserves").status == Status::kPass);
  CHECK(find_condition(reports, "hawton preserves").status == Status::kPass);
  const auto& flat = find_condition(reports, "flat Q");
  CHECK(flat.status == Status::kFail);
  CHECK(flat.expected == Expectation::kFail);
  REQUIRE(flat.witness.has_value());
}

TEST_CASE("hawton identity suite statuses") {
  const OperatorCatalog cat = OperatorCatalog::build();
  const VerifierConfig cfg = small_config();

  const auto orig = check_hawton_identities(cat, "original", cfg);
  CHECK(find_condition(orig, "closed form equals").status == Status::kPass);
  CHECK(find_condition(orig, "K = (Q P^0 + P^0 Q)/2").status == Status::kPass);
  const auto& qlam = find_condition(orig, "[Q_i, Lambda^2] = 0");
  CHECK(qlam.status == Status::kFail);
  CHECK(qlam.expected == Expectation::kFail);

  const auto hat = check_hawton_identities(cat, "hat", cfg);
  CHECK(find_condition(hat, "L_hat").status == Status::kPass);
  CHECK(find_condition(hat, "K_hat").status == Status::kPass);

  const auto tilde = check_hawton_identities(cat, "tilde", cfg);
  CHECK(find_condition(tilde, "U [Q_i, Lambda^2] U*").status == Status::kPass);
  CHECK(find_condition(tilde, "[Q_hat_i, Lambda~^2] = 0").status ==
        Status::kFail);
}

TEST_CASE("full report determinism and verdicts") {
  VerifierConfig cfg = small_config();
  const ReportDocument doc = full_report(cfg);
  CHECK(doc.success);

  // every failing status carries a witness
  for (const auto& suite : doc.suites)
    for (const auto& c : suite.conditions)
      if (c.status == Status::kFail) CHECK(c.witness.has_value());

  // byte-identical serialization across runs
  const std::string once = render_structured(doc);
  const std::string twice = render_structured(full_report(cfg));
  CHECK(once == twice);

  // verdict invariant across seeds
  for (std::uint64_t seed : {1ull, 17ull, 1234567ull}) {
    VerifierConfig other = cfg;
    other.seed = seed;
    CHECK(full_report(other).success);
  }

  // unreachable tolerance forces mismatches
  VerifierConfig strict = cfg;
  strict.tolerance = 1e-30;
  ReportFilter lie_only;
  lie_only.suite = "lie_algebra";
  CHECK_FALSE(full_report(strict, lie_only).success);

  // pass/fail pattern is stable across axis margins
  VerifierConfig wide = cfg;
  wide.axis_margin = 0.5;
  const ReportDocument a = full_report(cfg);
  const ReportDocument b = full_report(wide);
  REQUIRE(a.suites.size() == b.suites.size());
  for (std::size_t s = 0; s < a.suites.size(); ++s) {
    REQUIRE(a.suites[s].conditions.size() == b.suites[s].conditions.size());
    for (std::size_t k = 0; k < a.suites[s].conditions.size(); ++k)
      CHECK(a.suites[s].conditions[k].status ==
            b.suites[s].conditions[k].status);
  }
}

TEST_CASE("report schema is frozen") {
  VerifierConfig cfg = small_config();
  ReportFilter filter;
  filter.suite = "helicity";
  const std::string text = render_structured(full_report(cfg, filter));
  const auto j = nlohmann::ordered_json::parse(text);

  std::vector<std::string> top;
  for (auto it = j.begin(); it != j.end(); ++it) top.push_back(it.key());
  CHECK(top == std::vector<std::string>{"config", "suites", "verdict"});

  std::vector<std::string> cfg_keys;
  for (auto it = j["config"].begin(); it != j["config"].end(); ++it)
    cfg_keys.push_back(it.key());
  CHECK(cfg_keys == std::vector<std::string>{"seed", "samples", "tolerance",
                                             "shell", "axis_margin"});

  const auto& suite = j["suites"][0];
  std::vector<std::string> suite_keys;
  for (auto it = suite.begin(); it != suite.end(); ++it)
    suite_keys.push_back(it.key());
  CHECK(suite_keys ==
        std::vector<std::string>{"name", "representation", "conditions"});

  const auto& cond = suite["conditions"][0];
  std::vector<std::string> cond_keys;
  for (auto it = cond.begin(); it != cond.end(); ++it)
    cond_keys.push_back(it.key());
  CHECK(cond_keys == std::vector<std::string>{"condition", "status",
                                              "expected", "witness",
                                              "tolerance", "samples", "seed",
                                              "note"});
  CHECK(j["verdict"] == "success");
}

TEST_CASE("filters mirror the report structure") {
  VerifierConfig cfg = small_config();
  ReportFilter filter;
  filter.suite = "position";
  filter.representation = "original";
  filter.op = "hawton";
  const ReportDocument doc = full_report(cfg, filter);
  REQUIRE(doc.suites.size() == 1);
  CHECK(doc.suites[0].name == "position");
  CHECK(doc.suites[0].representation == "original");
  for (const auto& c : doc.suites[0].conditions)
    CHECK(c.condition.find("hawton") == 0);
  CHECK(doc.success);  // the rotation failure is expected, so the verdict holds
}
