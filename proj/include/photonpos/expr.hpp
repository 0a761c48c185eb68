#pragma once

// Expression trees over the momentum variables p1, p2, p3 and the two
// radicals r = |p| and rho = sqrt(p1^2 + p2^2), closed under exact
// differentiation. All spherical-coordinate quantities used elsewhere
// (cos/sin of theta and phi, cot theta) are rational in these radicals,
// so no trigonometric nodes are needed.

#include <array>
#include <complex>
#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace photonpos {

using Complex = std::complex<double>;
using Point = std::array<double, 3>;

class SingularPointError : public std::runtime_error {
public:
  SingularPointError(std::string radical, const Point& pt);
  // "rho", "r", or "denominator" when the vanishing factor is not a radical
  const std::string& radical() const { return radical_; }
  const Point& point() const { return point_; }

private:
  std::string radical_;
  Point point_;
};

namespace detail {
struct Node;
using NodePtr = std::shared_ptr<const Node>;
}  // namespace detail

class ScalarExpr {
public:
  ScalarExpr();  // the constant 0

  static ScalarExpr constant(Complex c);
  static ScalarExpr constant(double x) { return constant(Complex{x, 0.0}); }
  static ScalarExpr i();          // imaginary unit
  static ScalarExpr var(int axis);  // p^axis, axis in 1..3
  static ScalarExpr radius();       // r
  static ScalarExpr cyl_radius();   // rho
  static ScalarExpr exp(const ScalarExpr& a);

  ScalarExpr pow(int n) const;

  // exact partial derivative with respect to p^axis
  ScalarExpr diff(int axis) const;

  // complex conjugate, resolved structurally at construction
  ScalarExpr conjugate() const;

  // substitution p -> -p; the radicals are invariant
  ScalarExpr negate_momentum() const;

  Complex eval(const Point& pt) const;

  bool is_zero() const;  // structurally the constant 0
  bool is_constant(Complex* value = nullptr) const;

  std::string str() const;

  const detail::Node* node() const { return node_.get(); }

  friend ScalarExpr operator+(const ScalarExpr&, const ScalarExpr&);
  friend ScalarExpr operator-(const ScalarExpr&, const ScalarExpr&);
  friend ScalarExpr operator*(const ScalarExpr&, const ScalarExpr&);
  friend ScalarExpr operator/(const ScalarExpr&, const ScalarExpr&);
  ScalarExpr operator-() const;

private:
  explicit ScalarExpr(detail::NodePtr n) : node_(std::move(n)) {}
  detail::NodePtr node_;
};

ScalarExpr operator*(Complex c, const ScalarExpr& e);
ScalarExpr operator*(double c, const ScalarExpr& e);

// structural equality (same tree up to shared nodes; no algebraic rewriting)
bool expr_equal(const ScalarExpr& a, const ScalarExpr& b);

// A set of expressions flattened into one evaluation program over the shared
// DAG. eval() produces, per expression, the value and an accumulated-magnitude
// scale (all subtractions counted as additions); the scale is what zero tests
// measure tolerances against, so cancellation-heavy entries do not trip them.
class CompiledExprSet {
public:
  explicit CompiledExprSet(std::span<const ScalarExpr> exprs);

  struct Result {
    Complex value;
    double scale;
  };

  void eval(const Point& pt, std::vector<Result>& out) const;
  std::vector<Result> eval(const Point& pt) const;
  std::size_t size() const { return roots_.size(); }

private:
  enum class OpCode : std::uint8_t {
    kConst, kVar, kRadR, kRadRho, kAdd, kSub, kMul, kDiv, kPow, kExp
  };
  struct Instr {
    OpCode op;
    std::int32_t a = -1;
    std::int32_t b = -1;
    std::int32_t aux = 0;  // axis for kVar, exponent for kPow
    Complex c{};
  };
  std::vector<Instr> program_;
  std::vector<std::int32_t> roots_;
};

}  // namespace photonpos
