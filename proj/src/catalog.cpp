#include "photonpos/catalog.hpp"

#include <random>
#include <stdexcept>

namespace photonpos {

namespace {

ScalarExpr cI() { return ScalarExpr::i(); }
ScalarExpr p(int i) { return ScalarExpr::var(i); }
ScalarExpr rr() { return ScalarExpr::radius(); }
ScalarExpr rho() { return ScalarExpr::cyl_radius(); }
ScalarExpr gauss() { return ScalarExpr::exp(-(rr() * rr())); }

}  // namespace

int eps3(int i, int j, int k) {
  return (i - j) * (j - k) * (k - i) / 2;
}

std::array<MatFn, 3> spin_matrices() {
  MatFn s1, s2, s3;
  const ScalarExpr i = cI();
  s1.m[1][2] = -i;
  s1.m[2][1] = i;
  s2.m[0][2] = i;
  s2.m[2][0] = -i;
  s3.m[0][1] = -i;
  s3.m[1][0] = i;
  return {s1, s2, s3};
}

std::array<ScalarExpr, 3> e_tilde(int i) {
  switch (i) {
    case 1:  // theta-hat
      return {p(3) * p(1) / (rr() * rho()), p(3) * p(2) / (rr() * rho()),
              -(rho() / rr())};
    case 2:  // phi-hat
      return {-(p(2) / rho()), p(1) / rho(), ScalarExpr()};
    case 3:  // r-hat
      return {p(1) / rr(), p(2) / rr(), p(3) / rr()};
  }
  throw std::invalid_argument("e_tilde index must be 1..3");
}

MatFn u_matrix() {
  MatFn u;
  for (int j = 1; j <= 3; ++j) {
    const auto col = e_tilde(j);
    for (int i = 0; i < 3; ++i) u.m[i][j - 1] = col[i];
  }
  return u;
}

namespace {

// (p x S)_i as a matrix of expressions
MatFn momentum_cross_spin(int i) {
  const auto s = spin_matrices();
  MatFn out;
  for (int j = 1; j <= 3; ++j)
    for (int k = 1; k <= 3; ++k) {
      const int e = eps3(i, j, k);
      if (e != 0)
        out = out + ScalarExpr::constant(double(e)) * (p(j) * s[k - 1]);
    }
  return out;
}

MatFn helicity_matrix() {
  const auto s = spin_matrices();
  MatFn out;
  for (int i = 1; i <= 3; ++i) out = out + (p(i) / rr()) * s[i - 1];
  return out;
}

std::array<LinOp, 3> flat_q() {
  return {LinOp::derivative(1, cI()), LinOp::derivative(2, cI()),
          LinOp::derivative(3, cI())};
}

}  // namespace

std::array<LinOp, 3> pryce_x() {
  auto q = flat_q();
  std::array<LinOp, 3> out;
  for (int i = 1; i <= 3; ++i) {
    const ScalarExpr inv_r2 = ScalarExpr::constant(1.0) / (rr() * rr());
    out[i - 1] =
        q[i - 1] + LinOp::multiplication(inv_r2 * momentum_cross_spin(i));
  }
  return out;
}

std::array<LinOp, 3> hawton_q() {
  auto base = pryce_x();
  const MatFn lam = helicity_matrix();
  const auto e2 = e_tilde(2);
  const ScalarExpr cot_over_r = p(3) / (rho() * rr());  // cot(theta)/p0
  std::array<LinOp, 3> out;
  for (int i = 0; i < 3; ++i) {
    out[i] =
        base[i] - LinOp::multiplication((cot_over_r * e2[i]) * lam);
  }
  return out;
}

OperatorCatalog OperatorCatalog::build() {
  OperatorCatalog cat;

  cat.P[0] = LinOp::multiplication(rr());
  for (int i = 1; i <= 3; ++i) cat.P[i] = LinOp::multiplication(p(i));

  cat.Q = flat_q();

  // L_i = -i eps_ijk p^j d_k
  for (int i = 1; i <= 3; ++i) {
    LinOp li;
    for (int j = 1; j <= 3; ++j)
      for (int k = 1; k <= 3; ++k) {
        const int e = eps3(i, j, k);
        if (e != 0)
          li = li + LinOp::derivative(
                        k, ScalarExpr::constant(Complex{0.0, -double(e)}) * p(j));
      }
    cat.L[i - 1] = li;
  }

  // K_i = i (p0 d_i + p^i / (2 p0))
  for (int i = 1; i <= 3; ++i) {
    cat.K[i - 1] =
        LinOp::derivative(i, cI() * rr()) +
        LinOp::multiplication(cI() * p(i) / (ScalarExpr::constant(2.0) * rr()));
  }

  const auto s = spin_matrices();
  for (int i = 0; i < 3; ++i) cat.spin[i] = LinOp::multiplication(s[i]);

  // n = pi x S
  for (int i = 1; i <= 3; ++i) {
    MatFn ni;
    for (int j = 1; j <= 3; ++j)
      for (int k = 1; k <= 3; ++k) {
        const int e = eps3(i, j, k);
        if (e != 0)
          ni = ni + ScalarExpr::constant(double(e)) * ((p(j) / rr()) * s[k - 1]);
      }
    cat.n[i - 1] = LinOp::multiplication(ni);
  }

  for (int i = 0; i < 3; ++i) {
    cat.M[i] = cat.L[i] + cat.spin[i];
    cat.N[i] = cat.K[i] + cat.n[i];
  }

  const MatFn lam = helicity_matrix();
  cat.lambda = LinOp::multiplication(lam);
  cat.lambda2 = LinOp::multiplication(lam * lam);

  cat.pryce = pryce_x();
  cat.hawton_closed = hawton_q();

  cat.u = u_matrix();
  for (int i = 0; i < 3; ++i)
    cat.hawton_conjugated[i] = unitary_conjugate(cat.u, cat.Q[i]);

  const MatFn ident = MatFn::identity();
  // parity/time-reversal twist of the transported representations:
  // Pi_hat = U Pi U*  ->  V(p) = U(p) U^T(-p) (U is real)
  const MatFn twist = cat.u * cat.u.negate_momentum().transpose();

  cat.original = Representation{"original", cat.P, cat.M, cat.N,
                                ident,      ident, cat.lambda};
  cat.auxiliary = Representation{"auxiliary", cat.P,  cat.L, cat.K,
                                 ident,       ident, LinOp::zero()};

  std::array<LinOp, 3> hatL, hatK, tildeM, tildeN;
  for (int i = 0; i < 3; ++i) {
    hatL[i] = unitary_conjugate(cat.u, cat.L[i]);
    hatK[i] = unitary_conjugate(cat.u, cat.K[i]);
    tildeM[i] = unitary_conjugate(cat.u, cat.M[i]);
    tildeN[i] = unitary_conjugate(cat.u, cat.N[i]);
  }
  cat.hat = Representation{"hat",  cat.P, hatL,  hatK,
                           twist, twist, LinOp::zero()};
  cat.tilde = Representation{"tilde", cat.P, tildeM, tildeN,
                             twist,  twist, unitary_conjugate(cat.u, cat.lambda)};
  return cat;
}

const Representation& OperatorCatalog::rep(const std::string& name) const {
  if (name == "original") return original;
  if (name == "auxiliary") return auxiliary;
  if (name == "hat") return hat;
  if (name == "tilde") return tilde;
  throw std::invalid_argument("unknown representation: " + name);
}

std::array<LinOp, 4> pauli_lubanski(const Representation& rep) {
  std::array<LinOp, 4> w;
  LinOp w0;
  for (int i = 1; i <= 3; ++i) w0 = w0 + compose(rep.P[i], rep.J[i - 1]);
  w[0] = w0;
  // sign fixed by the massless identities W = Lambda P (spinful) and W = 0
  // (orbital generators), not by any single epsilon convention
  for (int i = 1; i <= 3; ++i) {
    LinOp wi = compose(rep.P[0], rep.J[i - 1]);
    for (int j = 1; j <= 3; ++j)
      for (int k = 1; k <= 3; ++k) {
        const int e = eps3(i, j, k);
        if (e != 0)
          wi = wi + Complex{double(e), 0.0} * compose(rep.P[j], rep.B[k - 1]);
      }
    w[i] = wi;
  }
  return w;
}

std::string to_string(Subspace s) {
  switch (s) {
    case Subspace::kTransverse: return "transverse";
    case Subspace::kLongitudinal: return "longitudinal";
    case Subspace::kMixed: return "mixed";
  }
  return "?";
}

Subspace subspace_membership(const WaveFn& f, const SamplePlan& plan,
                             double tol) {
  ScalarExpr dot;
  for (int i = 1; i <= 3; ++i) dot = dot + p(i) * f.comp[i - 1];
  std::array<ScalarExpr, 1> dotv = {dot};
  std::array<std::string, 1> dotl = {"p.f"};
  const bool transverse = exprs_are_zero(dotv, dotl, plan, tol).pass;

  WaveFn cross;
  for (int i = 1; i <= 3; ++i) {
    ScalarExpr ci;
    for (int j = 1; j <= 3; ++j)
      for (int k = 1; k <= 3; ++k) {
        const int e = eps3(i, j, k);
        if (e != 0) ci = ci + ScalarExpr::constant(double(e)) * p(j) * f.comp[k - 1];
      }
    cross.comp[i - 1] = ci;
  }
  const bool longitudinal = wavefn_is_zero(cross, plan, tol).pass;

  if (transverse && longitudinal) return Subspace::kTransverse;  // f = 0
  if (transverse) return Subspace::kTransverse;
  if (longitudinal) return Subspace::kLongitudinal;
  return Subspace::kMixed;
}

const std::vector<NamedWaveFn>& wavefn_catalog() {
  static const std::vector<NamedWaveFn> catalog = [] {
    const ScalarExpr g = gauss();
    std::vector<NamedWaveFn> v;
    v.push_back({"gauss", WaveFn{g, ScalarExpr(), ScalarExpr()},
                 Subspace::kMixed});
    const auto e1 = e_tilde(1);
    v.push_back({"e1-transverse", WaveFn{g * e1[0], g * e1[1], g * e1[2]},
                 Subspace::kTransverse});
    const auto e2 = e_tilde(2);
    v.push_back({"e2-transverse", WaveFn{g * e2[0], g * e2[1], g * e2[2]},
                 Subspace::kTransverse});
    v.push_back({"cross-z-transverse", WaveFn{g * p(2), -(g * p(1)), ScalarExpr()},
                 Subspace::kTransverse});
    v.push_back({"radial-longitudinal", WaveFn{g * p(1), g * p(2), g * p(3)},
                 Subspace::kLongitudinal});
    const ScalarExpr c = p(1) * g;
    v.push_back({"radial-p1-longitudinal", WaveFn{c * p(1), c * p(2), c * p(3)},
                 Subspace::kLongitudinal});
    v.push_back({"poly-gauss",
                 WaveFn{p(1) * g, cI() * p(3) * g, p(2) * p(2) * g},
                 Subspace::kMixed});
    return v;
  }();
  return catalog;
}

const WaveFn* find_wavefn(const std::string& name) {
  for (const auto& w : wavefn_catalog())
    if (w.name == name) return &w.fn;
  return nullptr;
}

WaveFn random_wavefn(std::uint64_t seed) {
  std::mt19937_64 eng(seed);
  auto coeff = [&eng]() {
    auto unit = [&eng] { return double(eng() >> 11) * 0x1.0p-53 * 2.0 - 1.0; };
    return Complex{unit(), unit()};
  };
  const ScalarExpr g = gauss();
  WaveFn f;
  for (int a = 0; a < 3; ++a) {
    ScalarExpr poly = ScalarExpr::constant(coeff());
    for (int i = 1; i <= 3; ++i)
      poly = poly + ScalarExpr::constant(coeff()) * p(i);
    f.comp[a] = poly * g;
  }
  return f;
}

std::vector<NamedOperator> operator_registry(const OperatorCatalog& cat) {
  std::vector<NamedOperator> reg;
  auto put = [&reg](std::string name, const LinOp& op) {
    reg.push_back({std::move(name), op});
  };
  for (int mu = 0; mu <= 3; ++mu) put("P" + std::to_string(mu), cat.P[mu]);
  for (int i = 1; i <= 3; ++i) {
    put("Q" + std::to_string(i), cat.Q[i - 1]);
    put("L" + std::to_string(i), cat.L[i - 1]);
    put("K" + std::to_string(i), cat.K[i - 1]);
    put("S" + std::to_string(i), cat.spin[i - 1]);
    put("n" + std::to_string(i), cat.n[i - 1]);
    put("M" + std::to_string(i), cat.M[i - 1]);
    put("N" + std::to_string(i), cat.N[i - 1]);
  }
  put("helicity", cat.lambda);
  put("lambda2", cat.lambda2);
  put("helicity-tilde", cat.tilde.helicity);
  put("lambda2-tilde", compose(cat.tilde.helicity, cat.tilde.helicity));
  for (int i = 1; i <= 3; ++i) {
    put("pryce-" + std::to_string(i), cat.pryce[i - 1]);
    put("hawton-" + std::to_string(i), cat.hawton_closed[i - 1]);
    put("hawton-closed-form-" + std::to_string(i), cat.hawton_closed[i - 1]);
    put("hawton-conjugated-" + std::to_string(i), cat.hawton_conjugated[i - 1]);
    put("hat-L" + std::to_string(i), cat.hat.J[i - 1]);
    put("hat-K" + std::to_string(i), cat.hat.B[i - 1]);
    put("tilde-M" + std::to_string(i), cat.tilde.J[i - 1]);
    put("tilde-N" + std::to_string(i), cat.tilde.B[i - 1]);
  }
  const auto w = pauli_lubanski(cat.original);
  const auto wh = pauli_lubanski(cat.hat);
  for (int mu = 0; mu <= 3; ++mu) {
    put("W" + std::to_string(mu), w[mu]);
    put("hat-W" + std::to_string(mu), wh[mu]);
  }
  put("U", LinOp::multiplication(cat.u));
  return reg;
}

std::vector<std::pair<std::string, std::vector<std::string>>>
operator_groups() {
  std::vector<std::pair<std::string, std::vector<std::string>>> groups;
  auto family = [&groups](const std::string& base, const std::string& prefix,
                          int lo, int hi) {
    std::vector<std::string> names;
    for (int i = lo; i <= hi; ++i) names.push_back(prefix + std::to_string(i));
    groups.emplace_back(base, std::move(names));
  };
  family("P", "P", 0, 3);
  for (const char* b : {"Q", "L", "K", "S", "n", "M", "N"})
    family(b, b, 1, 3);
  family("pryce", "pryce-", 1, 3);
  family("hawton", "hawton-", 1, 3);
  family("hawton-closed-form", "hawton-closed-form-", 1, 3);
  family("hawton-conjugated", "hawton-conjugated-", 1, 3);
  family("hat-L", "hat-L", 1, 3);
  family("hat-K", "hat-K", 1, 3);
  family("tilde-M", "tilde-M", 1, 3);
  family("tilde-N", "tilde-N", 1, 3);
  family("W", "W", 0, 3);
  family("hat-W", "hat-W", 0, 3);
  return groups;
}

}  // namespace photonpos
