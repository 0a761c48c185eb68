#pragma once

// Concrete operators: translation/rotation/boost generators in the original,
// auxiliary (orbital), hat, and tilde representations, helicity and its
// projector, the Pryce and Hawton position operators, the spherical-frame
// unitary U, and a small corpus of test wavefunctions.

#include <cstdint>
#include <string>
#include <vector>

#include "photonpos/linop.hpp"

namespace photonpos {

struct Representation {
  std::string name;            // original | auxiliary | hat | tilde
  std::array<LinOp, 4> P;      // P^0..P^3 (shared by all representations)
  std::array<LinOp, 3> J;      // rotation generators
  std::array<LinOp, 3> B;      // boost generators
  MatFn parity_twist;          // V with (Pi_V f)(p) = V(p) f(-p)
  MatFn timerev_twist;         // V with (Theta_V f)(p) = V(p) f*(-p)
  LinOp helicity;
};

// Levi-Civita symbol, 1-based indices.
int eps3(int i, int j, int k);

std::array<MatFn, 3> spin_matrices();

// Columns are the spherical frame vectors: U e_i = e~_i. Real, orthogonal,
// singular on the p3 axis.
MatFn u_matrix();

// The spherical frame in rational-radical form; i = 1,2,3 gives
// theta-hat, phi-hat, r-hat.
std::array<ScalarExpr, 3> e_tilde(int i);

std::array<LinOp, 3> pryce_x();

// Closed form of the transported flat position operator:
//   i d/dp + (p x S)/p0^2 - (cot(theta)/p0) e~_2 (pi.S)
// (the last spin factor is the spin component along p, i.e. the transported
// S_3 of the spherical frame).
std::array<LinOp, 3> hawton_q();

struct OperatorCatalog {
  std::array<LinOp, 4> P;
  std::array<LinOp, 3> Q;
  std::array<LinOp, 3> L;
  std::array<LinOp, 3> K;
  std::array<LinOp, 3> spin;    // S_k as multiplication operators
  std::array<LinOp, 3> n;      // pi x S
  std::array<LinOp, 3> M;      // L + S
  std::array<LinOp, 3> N;      // K + n
  LinOp lambda;                // pi . S
  LinOp lambda2;
  std::array<LinOp, 3> pryce;
  std::array<LinOp, 3> hawton_closed;
  std::array<LinOp, 3> hawton_conjugated;  // U Q U*
  MatFn u;
  Representation original;
  Representation auxiliary;   // orbital pair (L, K)
  Representation hat;
  Representation tilde;

  static OperatorCatalog build();

  const Representation& rep(const std::string& name) const;
};

// W^0 = P.J, W^i = P^0 J^i - (P x B)^i from the representation's own
// generators.
std::array<LinOp, 4> pauli_lubanski(const Representation& rep);

enum class Subspace { kTransverse, kLongitudinal, kMixed };

std::string to_string(Subspace s);

// Classify by zero-testing p.f (transverse) and p x f (longitudinal).
Subspace subspace_membership(const WaveFn& f,
                             const SamplePlan& plan = default_plan(),
                             double tol = 1e-9);

struct NamedWaveFn {
  std::string name;
  WaveFn fn;
  Subspace expected;
};

const std::vector<NamedWaveFn>& wavefn_catalog();
const WaveFn* find_wavefn(const std::string& name);

// Deterministic polynomial-times-Gaussian wavefunction; smooth everywhere,
// safe for quadrature.
WaveFn random_wavefn(std::uint64_t seed);

struct NamedOperator {
  std::string name;
  LinOp op;
};

// Flat name -> operator table for the CLI and bindings.
std::vector<NamedOperator> operator_registry(const OperatorCatalog& cat);

// Family name -> member names ("pryce" -> pryce-1, pryce-2, pryce-3).
std::vector<std::pair<std::string, std::vector<std::string>>> operator_groups();

}  // namespace photonpos
