#pragma once

// First-order differential operators on 3-component momentum-space
// wavefunctions:
//
//   (O f)(p) = A(p) f(p) + sum_i b_i(p) df/dp^i
//
// with A a 3x3 expression matrix and scalar derivative coefficients b_i
// (implicitly times the identity). The class is closed under linear
// combinations, commutators, composition with scalar multiplication
// operators, formal adjoints and (anti)unitary conjugation by
// multiplicative matrices.

#include <array>
#include <optional>
#include <string>

#include "photonpos/expr.hpp"
#include "photonpos/sample.hpp"

namespace photonpos {

struct WaveFn {
  std::array<ScalarExpr, 3> comp;

  WaveFn() = default;
  WaveFn(ScalarExpr f1, ScalarExpr f2, ScalarExpr f3)
      : comp{std::move(f1), std::move(f2), std::move(f3)} {}
};

WaveFn operator+(const WaveFn& a, const WaveFn& b);
WaveFn operator-(const WaveFn& a, const WaveFn& b);
WaveFn operator*(const ScalarExpr& c, const WaveFn& f);

struct MatFn {
  std::array<std::array<ScalarExpr, 3>, 3> m{};  // all entries default to 0

  static MatFn identity();
  static MatFn scalar(const ScalarExpr& c);  // c times identity

  ScalarExpr& operator()(int i, int j) { return m[i][j]; }
  const ScalarExpr& operator()(int i, int j) const { return m[i][j]; }

  MatFn transpose() const;
  MatFn conjugate() const;
  MatFn dagger() const;  // conjugate transpose
  MatFn diff(int axis) const;
  MatFn negate_momentum() const;
  bool is_structurally_zero() const;
};

MatFn operator+(const MatFn& a, const MatFn& b);
MatFn operator-(const MatFn& a, const MatFn& b);
MatFn operator*(const MatFn& a, const MatFn& b);
MatFn operator*(const ScalarExpr& c, const MatFn& a);

struct LinOp {
  MatFn mult;                         // multiplicative part
  std::array<ScalarExpr, 3> deriv{};  // coefficient of d/dp^i

  static LinOp zero();
  static LinOp identity();
  static LinOp multiplication(const ScalarExpr& c);  // c(p) times identity
  static LinOp multiplication(const MatFn& a);
  static LinOp derivative(int axis, const ScalarExpr& coeff);

  bool is_multiplicative() const;  // all derivative coefficients zero
  // true iff mult is structurally c * identity; fills *c when non-null
  bool is_scalar_multiplication(ScalarExpr* c = nullptr) const;
  bool is_structurally_zero() const;
};

LinOp operator+(const LinOp& a, const LinOp& b);
LinOp operator-(const LinOp& a, const LinOp& b);
LinOp operator*(Complex c, const LinOp& o);
LinOp operator*(const ScalarExpr& c, const LinOp& o);  // scalar function times o

WaveFn apply(const LinOp& op, const WaveFn& f);

// Closed-form commutator. Stays in the class because the derivative
// coefficients are scalar: the would-be second-order terms cancel.
LinOp commutator(const LinOp& a, const LinOp& b);

// Operator product. Defined when both factors are multiplicative (full
// matrix product) or when one factor is a scalar multiplication operator
// (product rule). Anything else would leave the class; throws.
LinOp compose(const LinOp& a, const LinOp& b);

// Adjoint with respect to the plain L^2 scalar product (integration by
// parts, domain questions ignored).
LinOp formal_adjoint(const LinOp& op);

// V o V^dagger for a multiplicative unitary V(p). Uses V V^dagger = 1, so the
// derivative coefficients pass through unchanged. V is unitarity-checked on
// the plan points.
LinOp unitary_conjugate(const MatFn& v, const LinOp& op,
                        const SamplePlan& plan = default_plan(),
                        double tol = 1e-9);

// Pi_V o Pi_V with (Pi_V f)(p) = V(p) f(-p); V(p) V(-p) = 1 required and
// checked on the plan points.
LinOp parity_conjugate(const MatFn& v, const LinOp& op,
                       const SamplePlan& plan = default_plan(),
                       double tol = 1e-9);

// Theta_V o Theta_V with (Theta_V f)(p) = V(p) f*(-p); antiunitary, so the
// coefficients are conjugated as well.
LinOp antiunitary_conjugate(const MatFn& v, const LinOp& op,
                            const SamplePlan& plan = default_plan(),
                            double tol = 1e-9);

struct Witness {
  Point point;
  std::string entry;  // "A(i,j)", "b(i)", or "f(i)" for wavefunctions
  Complex value;
};

struct ZeroTestResult {
  bool pass = true;
  std::optional<Witness> witness;
};

// Pass iff every entry magnitude stays below tol * (1 + local term scale) at
// every plan point; otherwise the first violation in sample order.
ZeroTestResult op_is_zero(const LinOp& op, const SamplePlan& plan,
                          double tol = 1e-9);
ZeroTestResult wavefn_is_zero(const WaveFn& f, const SamplePlan& plan,
                              double tol = 1e-9);
ZeroTestResult exprs_are_zero(std::span<const ScalarExpr> exprs,
                              std::span<const std::string> labels,
                              const SamplePlan& plan, double tol);

// Evaluate a wavefunction's three components at one point.
std::array<Complex, 3> eval(const WaveFn& f, const Point& pt);

// Stable rendering: 3x3 multiplicative matrix plus derivative coefficients.
std::string show(const LinOp& op);

}  // namespace photonpos
