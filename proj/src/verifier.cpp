#include "photonpos/verifier.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace photonpos {

namespace {

constexpr double kTwistCheckTol = 1e-9;  // precondition check, not a claim
constexpr int kQuadratureSamples = 100000;

ScalarExpr p(int i) { return ScalarExpr::var(i); }

struct SuiteContext {
  const VerifierConfig* cfg;
  std::string suite;
  std::string rep;

  SamplePlan plan_for(const std::string& condition) const {
    SamplePlan plan;
    plan.seed = derive_seed(cfg->seed, suite + "/" + rep + "/" + condition);
    plan.count = cfg->samples;
    plan.r_min = cfg->shell_min;
    plan.r_max = cfg->shell_max;
    plan.axis_margin = cfg->axis_margin;
    return plan;
  }

  ConditionReport base(const std::string& condition, Expectation expected,
                       std::uint64_t seed) const {
    ConditionReport r;
    r.suite = suite;
    r.representation = rep;
    r.condition = condition;
    r.expected = expected;
    r.tolerance = cfg->tolerance;
    r.samples = cfg->samples;
    r.seed = seed;
    return r;
  }

  // single zero-test condition
  ConditionReport zero(const std::string& condition, const LinOp& op,
                       Expectation expected, std::string note = "") const {
    const SamplePlan plan = plan_for(condition);
    ConditionReport r = base(condition, expected, plan.seed);
    r.note = std::move(note);
    const auto res = op_is_zero(op, plan, cfg->tolerance);
    r.status = res.pass ? Status::kPass : Status::kFail;
    r.witness = res.witness;
    return r;
  }

  // one condition covering a family of operator zero-tests; first failure
  // in family order provides the witness
  ConditionReport zero_family(const std::string& condition,
                              const std::vector<LinOp>& ops,
                              Expectation expected,
                              std::string note = "") const {
    const SamplePlan plan = plan_for(condition);
    ConditionReport r = base(condition, expected, plan.seed);
    r.note = std::move(note);
    r.status = Status::kPass;
    for (const LinOp& op : ops) {
      const auto res = op_is_zero(op, plan, cfg->tolerance);
      if (!res.pass) {
        r.status = Status::kFail;
        r.witness = res.witness;
        break;
      }
    }
    return r;
  }

  ConditionReport zero_wavefns(const std::string& condition,
                               const std::vector<WaveFn>& fns,
                               Expectation expected,
                               std::string note = "") const {
    const SamplePlan plan = plan_for(condition);
    ConditionReport r = base(condition, expected, plan.seed);
    r.note = std::move(note);
    r.status = Status::kPass;
    for (const WaveFn& f : fns) {
      const auto res = wavefn_is_zero(f, plan, cfg->tolerance);
      if (!res.pass) {
        r.status = Status::kFail;
        r.witness = res.witness;
        break;
      }
    }
    return r;
  }
};

LinOp scaled_identity(Complex c) {
  return LinOp::multiplication(ScalarExpr::constant(c));
}

}  // namespace

std::string to_string(Status s) {
  switch (s) {
    case Status::kPass: return "pass";
    case Status::kFail: return "fail";
    case Status::kVacuousPass: return "vacuous-pass";
  }
  return "?";
}

std::string to_string(Expectation e) {
  switch (e) {
    case Expectation::kPass: return "pass";
    case Expectation::kFail: return "fail";
    case Expectation::kInformational: return "informational";
  }
  return "?";
}

bool ConditionReport::matches_expectation() const {
  switch (expected) {
    case Expectation::kInformational: return true;
    case Expectation::kPass:
      return status == Status::kPass || status == Status::kVacuousPass;
    case Expectation::kFail: return status == Status::kFail;
  }
  return false;
}

std::vector<ConditionReport> check_lie_algebra(const Representation& rep,
                                               const VerifierConfig& cfg) {
  SuiteContext ctx{&cfg, "lie_algebra", rep.name};
  std::vector<ConditionReport> out;
  const ScalarExpr iu = ScalarExpr::i();

  std::vector<LinOp> ops;
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) {
      LinOp rhs;
      for (int k = 1; k <= 3; ++k)
        if (int e = eps3(i, j, k); e != 0)
          rhs = rhs + Complex{0.0, double(e)} * rep.P[k];
      ops.push_back(commutator(rep.J[i - 1], rep.P[j]) - rhs);
    }
  out.push_back(ctx.zero_family("[J_i,P_j] = i eps_ijk P_k", ops,
                                Expectation::kPass));

  ops.clear();
  for (int i = 0; i < 3; ++i) ops.push_back(commutator(rep.J[i], rep.P[0]));
  out.push_back(ctx.zero_family("[J_i,P_0] = 0", ops, Expectation::kPass));

  ops.clear();
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) {
      LinOp rhs;
      if (i == j) rhs = Complex{0.0, 1.0} * rep.P[0];
      ops.push_back(commutator(rep.B[i - 1], rep.P[j]) - rhs);
    }
  out.push_back(ctx.zero_family("[B_i,P_j] = i delta_ij P_0", ops,
                                Expectation::kPass));

  ops.clear();
  for (int i = 1; i <= 3; ++i)
    ops.push_back(commutator(rep.B[i - 1], rep.P[0]) -
                  Complex{0.0, 1.0} * rep.P[i]);
  out.push_back(
      ctx.zero_family("[B_i,P_0] = i P_i", ops, Expectation::kPass));

  ops.clear();
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) {
      LinOp rhs;
      for (int k = 1; k <= 3; ++k)
        if (int e = eps3(i, j, k); e != 0)
          rhs = rhs + Complex{0.0, -double(e)} * rep.J[k - 1];
      ops.push_back(commutator(rep.B[i - 1], rep.B[j - 1]) - rhs);
    }
  out.push_back(ctx.zero_family("[B_i,B_j] = -i eps_ijk J_k", ops,
                                Expectation::kPass));

  ops.clear();
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) {
      LinOp rhs;
      for (int k = 1; k <= 3; ++k)
        if (int e = eps3(i, j, k); e != 0)
          rhs = rhs + Complex{0.0, double(e)} * rep.B[k - 1];
      ops.push_back(commutator(rep.J[i - 1], rep.B[j - 1]) - rhs);
    }
  out.push_back(ctx.zero_family("[J_i,B_j] = i eps_ijk B_k", ops,
                                Expectation::kPass));

  ops.clear();
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) {
      LinOp rhs;
      for (int k = 1; k <= 3; ++k)
        if (int e = eps3(i, j, k); e != 0)
          rhs = rhs + Complex{0.0, double(e)} * rep.J[k - 1];
      ops.push_back(commutator(rep.J[i - 1], rep.J[j - 1]) - rhs);
    }
  out.push_back(ctx.zero_family("[J_i,J_j] = i eps_ijk J_k", ops,
                                Expectation::kPass));

  ops.clear();
  for (int mu = 0; mu <= 3; ++mu)
    for (int nu = 0; nu <= 3; ++nu)
      ops.push_back(commutator(rep.P[mu], rep.P[nu]));
  out.push_back(
      ctx.zero_family("[P_mu,P_nu] = 0", ops, Expectation::kPass));

  LinOp p2 = compose(rep.P[0], rep.P[0]);
  for (int i = 1; i <= 3; ++i) p2 = p2 - compose(rep.P[i], rep.P[i]);
  out.push_back(ctx.zero("P^mu P_mu = 0", p2, Expectation::kPass));

  (void)iu;
  return out;
}

std::vector<ConditionReport> check_helicity(const OperatorCatalog& cat,
                                            const VerifierConfig& cfg) {
  SuiteContext ctx{&cfg, "helicity", "original"};
  std::vector<ConditionReport> out;

  out.push_back(ctx.zero(
      "Lambda^3 = Lambda",
      compose(compose(cat.lambda, cat.lambda), cat.lambda) - cat.lambda,
      Expectation::kPass));

  out.push_back(ctx.zero("(Lambda^2)^2 = Lambda^2",
                         compose(cat.lambda2, cat.lambda2) - cat.lambda2,
                         Expectation::kPass));

  out.push_back(ctx.zero(
      "Lambda^2 pointwise hermitian",
      LinOp::multiplication(cat.lambda2.mult - cat.lambda2.mult.dagger()),
      Expectation::kPass));

  std::vector<LinOp> ops;
  for (int mu = 0; mu <= 3; ++mu)
    ops.push_back(commutator(cat.lambda, cat.P[mu]));
  for (int i = 0; i < 3; ++i) ops.push_back(commutator(cat.lambda, cat.M[i]));
  for (int i = 0; i < 3; ++i) ops.push_back(commutator(cat.lambda, cat.N[i]));
  out.push_back(ctx.zero_family("[Lambda,G] = 0 for all ten generators", ops,
                                Expectation::kPass));

  std::vector<WaveFn> diffs;
  for (const auto& w : wavefn_catalog())
    if (w.expected == Subspace::kTransverse)
      diffs.push_back(apply(cat.lambda2, w.fn) - w.fn);
  out.push_back(ctx.zero_wavefns("Lambda^2 fixes the transverse corpus",
                                 diffs, Expectation::kPass));

  diffs.clear();
  for (const auto& w : wavefn_catalog())
    if (w.expected == Subspace::kLongitudinal)
      diffs.push_back(apply(cat.lambda2, w.fn));
  out.push_back(ctx.zero_wavefns("Lambda^2 annihilates the longitudinal corpus",
                                 diffs, Expectation::kPass));

  {
    const std::string condition = "catalog corpus classification";
    const SamplePlan plan = ctx.plan_for(condition);
    ConditionReport r = ctx.base(condition, Expectation::kPass, plan.seed);
    r.status = Status::kPass;
    for (const auto& w : wavefn_catalog()) {
      if (subspace_membership(w.fn, plan, cfg.tolerance) != w.expected) {
        r.status = Status::kFail;
        r.note = "misclassified: " + w.name;
        ScalarExpr dot;
        for (int i = 1; i <= 3; ++i) dot = dot + p(i) * w.fn.comp[i - 1];
        const Point pt = sample_points(plan).at(0);
        r.witness = Witness{pt, "p.f", dot.eval(pt)};
        break;
      }
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<ConditionReport> check_pauli_lubanski(const OperatorCatalog& cat,
                                                  const Representation& rep,
                                                  const VerifierConfig& cfg) {
  SuiteContext ctx{&cfg, "pauli_lubanski", rep.name};
  std::vector<ConditionReport> out;
  const auto w = pauli_lubanski(rep);

  const bool spinless = rep.helicity.is_structurally_zero();
  std::vector<LinOp> ops;
  if (spinless) {
    for (int mu = 0; mu <= 3; ++mu) ops.push_back(w[mu]);
    out.push_back(
        ctx.zero_family("W^mu = 0", ops, Expectation::kPass));
  } else {
    for (int mu = 0; mu <= 3; ++mu)
      ops.push_back(w[mu] - compose(rep.helicity, rep.P[mu]));
    out.push_back(ctx.zero_family("W^mu = Lambda P^mu", ops,
                                  Expectation::kPass));
  }

  LinOp pw = compose(rep.P[0], w[0]);
  for (int i = 1; i <= 3; ++i) pw = pw - compose(rep.P[i], w[i]);
  out.push_back(ctx.zero("P^mu W_mu = 0", pw, Expectation::kPass));
  (void)cat;
  return out;
}

std::vector<ConditionReport> check_position_conditions(
    const std::string& op_label, const std::array<LinOp, 3>& x,
    const Representation& rep, const OperatorCatalog& cat,
    const VerifierConfig& cfg) {
  SuiteContext ctx{&cfg, "position", rep.name};
  std::vector<ConditionReport> out;
  const bool hawton = op_label == "hawton";
  const std::string twist_note =
      rep.name == "original" ? "" : "derived-from-twist";

  {
    std::vector<LinOp> ops;
    for (int i = 1; i <= 3; ++i)
      for (int j = 1; j <= 3; ++j) {
        LinOp rhs;
        for (int k = 1; k <= 3; ++k)
          if (int e = eps3(i, j, k); e != 0)
            rhs = rhs + Complex{0.0, double(e)} * x[k - 1];
        ops.push_back(commutator(rep.J[i - 1], x[j - 1]) - rhs);
      }
    const Expectation expected = (hawton && rep.name == "original")
                                     ? Expectation::kFail
                                     : Expectation::kPass;
    out.push_back(ctx.zero_family(op_label + ": [J_i,X_j] = i eps_ijk X_k",
                                  ops, expected));
  }

  {
    std::vector<LinOp> ops;
    for (int i = 1; i <= 3; ++i)
      for (int j = 1; j <= 3; ++j) {
        LinOp rhs = i == j ? scaled_identity({0.0, -1.0}) : LinOp::zero();
        ops.push_back(commutator(rep.P[i], x[j - 1]) - rhs);
      }
    out.push_back(ctx.zero_family(op_label + ": [P_i,X_j] = -i delta_ij", ops,
                                  Expectation::kPass));
  }

  {
    std::vector<LinOp> ops;
    for (int i = 0; i < 3; ++i)
      ops.push_back(parity_conjugate(rep.parity_twist, x[i],
                                     ctx.plan_for("involution"),
                                     kTwistCheckTol) +
                    x[i]);
    Expectation expected = Expectation::kPass;
    if (hawton && rep.name != "hat") expected = Expectation::kInformational;
    out.push_back(ctx.zero_family(op_label + ": Pi X_i Pi = -X_i", ops,
                                  expected, twist_note));
  }

  {
    std::vector<LinOp> ops;
    for (int i = 0; i < 3; ++i)
      ops.push_back(antiunitary_conjugate(rep.timerev_twist, x[i],
                                          ctx.plan_for("involution"),
                                          kTwistCheckTol) -
                    x[i]);
    Expectation expected = Expectation::kPass;
    if (hawton && rep.name != "hat") expected = Expectation::kInformational;
    out.push_back(ctx.zero_family(op_label + ": Theta X_i Theta = X_i", ops,
                                  expected, twist_note));
  }

  {
    const std::string condition = op_label + ": [X_i, Lambda^2] = 0";
    if (rep.helicity.is_structurally_zero()) {
      ConditionReport r = ctx.base(condition, Expectation::kPass,
                                   ctx.plan_for(condition).seed);
      r.status = Status::kVacuousPass;
      r.note = "helicity of this representation is identically zero";
      out.push_back(std::move(r));
    } else {
      const LinOp lam2 = compose(rep.helicity, rep.helicity);
      std::vector<LinOp> ops;
      for (int i = 0; i < 3; ++i) ops.push_back(commutator(x[i], lam2));
      const Expectation expected = (hawton && rep.name == "tilde")
                                       ? Expectation::kFail
                                       : Expectation::kPass;
      out.push_back(ctx.zero_family(condition, ops, expected));
    }
  }

  {
    std::vector<LinOp> ops;
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) ops.push_back(commutator(x[i], x[j]));
    const Expectation expected =
        hawton ? Expectation::kPass : Expectation::kFail;
    out.push_back(ctx.zero_family(op_label + ": [X_i,X_j] = 0", ops,
                                  expected));
  }

  (void)cat;
  return out;
}

std::vector<ConditionReport> check_rotation_witness(const OperatorCatalog& cat,
                                                    const VerifierConfig& cfg) {
  SuiteContext ctx{&cfg, "rotation_witness", "original"};
  std::vector<ConditionReport> out;
  const WaveFn f = *find_wavefn("gauss");  // (a(p0), 0, 0)

  out.push_back(ctx.zero_wavefns(
      "[M_1,hawton_1] f = 0 on the radial witness",
      {apply(commutator(cat.M[0], cat.hawton_closed[0]), f)},
      Expectation::kFail));

  out.push_back(ctx.zero_wavefns(
      "[M_1,pryce_1] f = 0 on the radial witness",
      {apply(commutator(cat.M[0], cat.pryce[0]), f)}, Expectation::kPass));

  out.push_back(ctx.zero_wavefns(
      "[P_1,hawton_1] f = -i f",
      {apply(commutator(cat.P[1], cat.hawton_closed[0]), f) +
       ScalarExpr::i() * f},
      Expectation::kPass));
  return out;
}

std::vector<ConditionReport> check_subspace_invariance(
    const OperatorCatalog& cat, const VerifierConfig& cfg) {
  SuiteContext ctx{&cfg, "subspace_invariance", "original"};
  std::vector<ConditionReport> out;

  auto cross_with_p = [](const WaveFn& g) {
    WaveFn c;
    for (int i = 1; i <= 3; ++i) {
      ScalarExpr ci;
      for (int j = 1; j <= 3; ++j)
        for (int k = 1; k <= 3; ++k)
          if (int e = eps3(i, j, k); e != 0)
            ci = ci + ScalarExpr::constant(double(e)) * p(j) * g.comp[k - 1];
      c.comp[i - 1] = ci;
    }
    return c;
  };

  auto longitudinal_defects = [&](const std::array<LinOp, 3>& x) {
    std::vector<WaveFn> defects;
    for (const auto& w : wavefn_catalog())
      if (w.expected == Subspace::kLongitudinal)
        for (int i = 0; i < 3; ++i)
          defects.push_back(cross_with_p(apply(x[i], w.fn)));
    return defects;
  };

  out.push_back(ctx.zero_wavefns("pryce preserves the longitudinal subspace",
                                 longitudinal_defects(cat.pryce),
                                 Expectation::kPass));
  out.push_back(ctx.zero_wavefns("hawton preserves the longitudinal subspace",
                                 longitudinal_defects(cat.hawton_closed),
                                 Expectation::kPass));
  out.push_back(ctx.zero_wavefns(
      "flat Q preserves the longitudinal subspace",
      longitudinal_defects(cat.Q), Expectation::kFail));
  return out;
}

std::vector<ConditionReport> check_hawton_identities(
    const OperatorCatalog& cat, const std::string& rep_name,
    const VerifierConfig& cfg) {
  SuiteContext ctx{&cfg, "hawton_identities", rep_name};
  std::vector<ConditionReport> out;
  const ScalarExpr half = ScalarExpr::constant(0.5);

  if (rep_name == "original") {
    std::vector<LinOp> ops;
    for (int i = 0; i < 3; ++i)
      ops.push_back(cat.hawton_closed[i] - cat.hawton_conjugated[i]);
    out.push_back(ctx.zero_family("closed form equals U Q U*", ops,
                                  Expectation::kPass));

    ops.clear();
    for (int i = 0; i < 3; ++i)
      ops.push_back(cat.K[i] - half * (compose(cat.Q[i], cat.P[0]) +
                                       compose(cat.P[0], cat.Q[i])));
    out.push_back(ctx.zero_family("K = (Q P^0 + P^0 Q)/2", ops,
                                  Expectation::kPass));

    ops.clear();
    for (int i = 0; i < 3; ++i)
      ops.push_back(commutator(cat.Q[i], cat.lambda2));
    out.push_back(ctx.zero_family("[Q_i, Lambda^2] = 0", ops,
                                  Expectation::kFail));
  } else if (rep_name == "hat") {
    std::vector<LinOp> ops;
    for (int i = 1; i <= 3; ++i) {
      LinOp rhs;
      for (int j = 1; j <= 3; ++j)
        for (int k = 1; k <= 3; ++k)
          if (int e = eps3(i, j, k); e != 0)
            rhs = rhs + Complex{double(e), 0.0} *
                            compose(cat.hawton_closed[j - 1], cat.P[k]);
      ops.push_back(cat.hat.J[i - 1] - rhs);
    }
    out.push_back(ctx.zero_family("L_hat = Q_hat x P", ops,
                                  Expectation::kPass));

    ops.clear();
    for (int i = 0; i < 3; ++i)
      ops.push_back(cat.hat.B[i] -
                    half * (compose(cat.hawton_closed[i], cat.P[0]) +
                            compose(cat.P[0], cat.hawton_closed[i])));
    out.push_back(ctx.zero_family("K_hat = (Q_hat P^0 + P^0 Q_hat)/2", ops,
                                  Expectation::kPass));
  } else if (rep_name == "tilde") {
    const LinOp lam2_tilde = compose(cat.tilde.helicity, cat.tilde.helicity);
    std::vector<LinOp> ops;
    for (int i = 0; i < 3; ++i)
      ops.push_back(
          commutator(cat.hawton_closed[i], lam2_tilde) -
          unitary_conjugate(cat.u, commutator(cat.Q[i], cat.lambda2)));
    out.push_back(ctx.zero_family(
        "[Q_hat_i, Lambda~^2] = U [Q_i, Lambda^2] U*", ops,
        Expectation::kPass));

    ops.clear();
    for (int i = 0; i < 3; ++i)
      ops.push_back(commutator(cat.hawton_closed[i], lam2_tilde));
    out.push_back(ctx.zero_family("[Q_hat_i, Lambda~^2] = 0", ops,
                                  Expectation::kFail));
  }
  return out;
}

namespace {

double unit_double(std::mt19937_64& eng) {
  return double(eng() >> 11) * 0x1.0p-53;
}

void require_damped(const WaveFn& f) {
  static const std::array<Point, 3> probes = {
      Point{3.4641016151377544, 3.4641016151377544, 3.4641016151377544},
      Point{5.879747322073336, -1.0689742750511053, 0.8551794200408843},
      Point{-2.0, 4.0, -4.0}};  // all at radius 6
  CompiledExprSet set(f.comp);
  std::vector<CompiledExprSet::Result> res;
  for (const Point& pt : probes) {
    set.eval(pt, res);
    for (const auto& r : res)
      if (std::abs(r.value) > 1e-10)
        throw std::invalid_argument(
            "inner_product requires Gaussian-damped wavefunctions");
  }
}

struct McEstimate {
  Complex mean{};
  double std_error = 0.0;
  double magnitude = 0.0;  // mean |h|, a scale for absolute floors
};

// common-point Monte Carlo over N(0, sigma^2 I); evaluator gets the point and
// returns the integrand value
template <typename F>
McEstimate mc_integral(std::uint64_t seed, int n, F&& integrand) {
  constexpr double kSigma = 0.5;
  const double norm =
      std::pow(2.0 * std::numbers::pi * kSigma * kSigma, -1.5);
  std::mt19937_64 eng(seed);
  auto normal_pair = [&eng]() {
    const double u1 = 1.0 - unit_double(eng);
    const double u2 = unit_double(eng);
    const double m = std::sqrt(-2.0 * std::log(u1));
    return std::array<double, 2>{m * std::cos(2.0 * std::numbers::pi * u2),
                                 m * std::sin(2.0 * std::numbers::pi * u2)};
  };
  Complex sum{};
  double sum_sq = 0.0;
  double sum_abs = 0.0;
  int collected = 0;
  std::vector<Complex> values;
  values.reserve(n);
  while (collected < n) {
    const auto ab = normal_pair();
    const auto cd = normal_pair();
    const Point pt{kSigma * ab[0], kSigma * ab[1], kSigma * cd[0]};
    const double r2 = pt[0] * pt[0] + pt[1] * pt[1] + pt[2] * pt[2];
    const double q = norm * std::exp(-r2 / (2.0 * kSigma * kSigma));
    Complex h;
    try {
      h = integrand(pt) / q;
    } catch (const SingularPointError&) {
      continue;  // measure-zero axis hit; draw the next point
    }
    sum += h;
    sum_abs += std::abs(h);
    values.push_back(h);
    ++collected;
  }
  McEstimate est;
  est.mean = sum / double(n);
  for (const Complex& h : values) sum_sq += std::norm(h - est.mean);
  est.std_error = n > 1 ? std::sqrt(sum_sq / (double(n) * double(n - 1))) : 0.0;
  est.magnitude = sum_abs / double(n);
  return est;
}

}  // namespace

InnerProductEstimate inner_product(const WaveFn& f, const WaveFn& g,
                                   std::uint64_t seed, int n_samples) {
  if (n_samples <= 0)
    throw std::invalid_argument("inner_product needs a positive sample count");
  require_damped(f);
  require_damped(g);
  CompiledExprSet fs(f.comp), gs(g.comp);
  std::vector<CompiledExprSet::Result> fr, gr;
  const auto est = mc_integral(seed, n_samples, [&](const Point& pt) {
    fs.eval(pt, fr);
    gs.eval(pt, gr);
    Complex h{};
    for (int i = 0; i < 3; ++i) h += std::conj(fr[i].value) * gr[i].value;
    return h;
  });
  return {est.mean, est.std_error, n_samples};
}

namespace {

// <g, O f> - <O g, f> on common sample points; zero for a formally
// self-adjoint O
McEstimate adjoint_defect(const LinOp& op, const WaveFn& f, const WaveFn& g,
                          std::uint64_t seed, int n) {
  require_damped(f);
  require_damped(g);
  const WaveFn of = apply(op, f);
  const WaveFn og = apply(op, g);
  CompiledExprSet fs(f.comp), gs(g.comp), ofs(of.comp), ogs(og.comp);
  std::vector<CompiledExprSet::Result> fr, gr, ofr, ogr;
  return mc_integral(seed, n, [&](const Point& pt) {
    fs.eval(pt, fr);
    gs.eval(pt, gr);
    ofs.eval(pt, ofr);
    ogs.eval(pt, ogr);
    Complex h{};
    for (int i = 0; i < 3; ++i) {
      h += std::conj(gr[i].value) * ofr[i].value;
      h -= std::conj(ogr[i].value) * fr[i].value;
    }
    return h;
  });
}

std::vector<std::pair<WaveFn, WaveFn>> quadrature_pairs(std::uint64_t seed,
                                                        int count) {
  std::vector<std::pair<WaveFn, WaveFn>> pairs;
  const WaveFn gauss = *find_wavefn("gauss");
  const WaveFn poly = *find_wavefn("poly-gauss");
  pairs.emplace_back(gauss, poly);
  for (int k = 1; int(pairs.size()) < count; ++k)
    pairs.emplace_back(random_wavefn(derive_seed(seed, "pair-f" + std::to_string(k))),
                       random_wavefn(derive_seed(seed, "pair-g" + std::to_string(k))));
  return pairs;
}

}  // namespace

std::vector<ConditionReport> check_adjoints(const OperatorCatalog& cat,
                                            const VerifierConfig& cfg) {
  SuiteContext ctx{&cfg, "adjoint", "original"};
  std::vector<ConditionReport> out;

  auto mc_condition = [&](const std::string& condition, const LinOp& op,
                          int pair_count) {
    const std::uint64_t seed =
        derive_seed(cfg.seed, ctx.suite + "/" + ctx.rep + "/" + condition);
    ConditionReport r = ctx.base(condition, Expectation::kPass, seed);
    r.samples = kQuadratureSamples;
    r.status = Status::kPass;
    const auto pairs = quadrature_pairs(seed, pair_count);
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      const auto est = adjoint_defect(op, pairs[k].first, pairs[k].second,
                                      derive_seed(seed, std::to_string(k)),
                                      kQuadratureSamples);
      const double bound =
          3.0 * est.std_error + 1e-10 * (1.0 + est.magnitude);
      if (std::abs(est.mean) > bound) {
        r.status = Status::kFail;
        r.witness = Witness{Point{0, 0, 0}, "quadrature-defect", est.mean};
        r.note = "pair " + std::to_string(k);
        break;
      }
    }
    out.push_back(std::move(r));
  };

  {
    const std::string condition = "<f,f> is real";
    const std::uint64_t seed =
        derive_seed(cfg.seed, ctx.suite + "/" + ctx.rep + "/" + condition);
    ConditionReport r = ctx.base(condition, Expectation::kPass, seed);
    r.samples = kQuadratureSamples;
    const auto est =
        inner_product(*find_wavefn("poly-gauss"), *find_wavefn("poly-gauss"),
                      seed, kQuadratureSamples);
    r.status = std::abs(est.value.imag()) <=
                       3.0 * est.std_error + 1e-12 * (1.0 + std::abs(est.value))
                   ? Status::kPass
                   : Status::kFail;
    if (r.status == Status::kFail)
      r.witness = Witness{Point{0, 0, 0}, "imag<f,f>", est.value};
    out.push_back(std::move(r));
  }

  {
    const std::string condition = "<f,g> = conj(<g,f>)";
    const std::uint64_t seed =
        derive_seed(cfg.seed, ctx.suite + "/" + ctx.rep + "/" + condition);
    ConditionReport r = ctx.base(condition, Expectation::kPass, seed);
    r.samples = kQuadratureSamples;
    const WaveFn& f = *find_wavefn("gauss");
    const WaveFn& g = *find_wavefn("poly-gauss");
    const auto fg = inner_product(f, g, seed, kQuadratureSamples);
    const auto gf = inner_product(g, f, seed, kQuadratureSamples);
    const Complex defect = fg.value - std::conj(gf.value);
    r.status = std::abs(defect) <= 3.0 * (fg.std_error + gf.std_error) +
                                       1e-12 * (1.0 + std::abs(fg.value))
                   ? Status::kPass
                   : Status::kFail;
    if (r.status == Status::kFail)
      r.witness = Witness{Point{0, 0, 0}, "sesquilinearity-defect", defect};
    out.push_back(std::move(r));
  }

  mc_condition("Q_1 formally self-adjoint (quadrature)", cat.Q[0], 5);
  mc_condition("L_1 formally self-adjoint (quadrature)", cat.L[0], 2);
  for (int i = 0; i < 3; ++i)
    mc_condition("pryce_" + std::to_string(i + 1) +
                     " formally self-adjoint (quadrature)",
                 cat.pryce[i], 2);
  return out;
}

std::vector<NamedOperator> property_pool(const OperatorCatalog& cat) {
  return {
      {"P0", cat.P[0]},
      {"P2", cat.P[2]},
      {"Q1", cat.Q[0]},
      {"Q3", cat.Q[2]},
      {"L1", cat.L[0]},
      {"L2", cat.L[1]},
      {"K1", cat.K[0]},
      {"K3", cat.K[2]},
      {"S2", cat.spin[1]},
      {"n1", cat.n[0]},
      {"M3", cat.M[2]},
      {"N2", cat.N[1]},
      {"helicity", cat.lambda},
      {"pryce-1", cat.pryce[0]},
      {"hawton-2", cat.hawton_closed[1]},
      {"tilde-M1", cat.tilde.J[0]},
  };
}

std::vector<ConditionReport> check_engine_oracle(const OperatorCatalog& cat,
                                                 const VerifierConfig& cfg) {
  SuiteContext ctx{&cfg, "engine_oracle", "catalog"};
  std::vector<ConditionReport> out;
  const auto pool = property_pool(cat);

  std::mt19937_64 eng(derive_seed(cfg.seed, "engine_oracle/pairs"));
  std::array<WaveFn, 5> fns;
  for (int k = 0; k < 5; ++k)
    fns[k] = random_wavefn(
        derive_seed(cfg.seed, "engine_oracle/wavefn" + std::to_string(k)));

  for (int pair = 0; pair < 20; ++pair) {
    const std::size_t ia = eng() % pool.size();
    std::size_t ib = eng() % (pool.size() - 1);
    if (ib >= ia) ++ib;
    const auto& a = pool[ia];
    const auto& b = pool[ib];
    const LinOp closed = commutator(a.op, b.op);
    std::vector<WaveFn> defects;
    for (const WaveFn& f : fns) {
      const WaveFn lhs = apply(closed, f);
      const WaveFn rhs = apply(a.op, apply(b.op, f)) -
                         apply(b.op, apply(a.op, f));
      defects.push_back(lhs - rhs);
    }
    out.push_back(ctx.zero_wavefns(
        "closed form vs apply-twice: [" + a.name + "," + b.name + "]",
        defects, Expectation::kPass));
  }
  return out;
}

ReportDocument full_report(const VerifierConfig& cfg,
                           const ReportFilter& filter) {
  const OperatorCatalog cat = OperatorCatalog::build();
  ReportDocument doc;
  doc.config = cfg;

  auto want_suite = [&](const std::string& name) {
    return filter.suite == "all" || filter.suite == name;
  };
  auto want_rep = [&](const std::string& name) {
    return filter.representation == "all" || filter.representation == name;
  };
  auto want_op = [&](const std::string& label) {
    return filter.op == "all" || filter.op == label;
  };

  auto add_suite = [&doc](std::string name, std::string rep,
                          std::vector<ConditionReport> conditions) {
    if (conditions.empty()) return;
    doc.suites.push_back(
        SuiteReport{std::move(name), std::move(rep), std::move(conditions)});
  };

  if (want_suite("lie_algebra"))
    for (const auto* rep :
         {&cat.original, &cat.auxiliary, &cat.hat, &cat.tilde})
      if (want_rep(rep->name))
        add_suite("lie_algebra", rep->name, check_lie_algebra(*rep, cfg));

  if (want_suite("helicity") && want_rep("original"))
    add_suite("helicity", "original", check_helicity(cat, cfg));

  if (want_suite("pauli_lubanski"))
    for (const auto* rep :
         {&cat.original, &cat.auxiliary, &cat.hat, &cat.tilde})
      if (want_rep(rep->name))
        add_suite("pauli_lubanski", rep->name,
                  check_pauli_lubanski(cat, *rep, cfg));

  if (want_suite("position")) {
    if (want_rep("original")) {
      std::vector<ConditionReport> conditions;
      if (want_op("pryce")) {
        auto c = check_position_conditions("pryce", cat.pryce, cat.original,
                                           cat, cfg);
        conditions.insert(conditions.end(), c.begin(), c.end());
      }
      if (want_op("hawton")) {
        auto c = check_position_conditions("hawton", cat.hawton_closed,
                                           cat.original, cat, cfg);
        conditions.insert(conditions.end(), c.begin(), c.end());
      }
      add_suite("position", "original", std::move(conditions));
    }
    for (const auto* rep : {&cat.hat, &cat.tilde})
      if (want_rep(rep->name) && want_op("hawton"))
        add_suite("position", rep->name,
                  check_position_conditions("hawton", cat.hawton_closed, *rep,
                                            cat, cfg));
  }

  if (want_suite("rotation_witness") && want_rep("original"))
    add_suite("rotation_witness", "original",
              check_rotation_witness(cat, cfg));

  if (want_suite("subspace_invariance") && want_rep("original"))
    add_suite("subspace_invariance", "original",
              check_subspace_invariance(cat, cfg));

  if (want_suite("hawton_identities"))
    for (const char* rep : {"original", "hat", "tilde"})
      if (want_rep(rep))
        add_suite("hawton_identities", rep,
                  check_hawton_identities(cat, rep, cfg));

  if (want_suite("adjoint") && want_rep("original"))
    add_suite("adjoint", "original", check_adjoints(cat, cfg));

  if (want_suite("engine_oracle") && want_rep("catalog"))
    add_suite("engine_oracle", "catalog", check_engine_oracle(cat, cfg));

  doc.success = true;
  for (const auto& suite : doc.suites)
    for (const auto& c : suite.conditions)
      if (!c.matches_expectation()) doc.success = false;
  return doc;
}

}  // namespace photonpos
