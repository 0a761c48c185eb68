#include "photonpos/expr.hpp"

#include <cmath>
#include <cstdio>
#include <unordered_map>

namespace photonpos {

namespace detail {

enum class Kind : std::uint8_t {
  kConst, kVar, kRadR, kRadRho, kAdd, kSub, kMul, kDiv, kPow, kExp
};

struct Node {
  Kind kind;
  Complex value{};   // kConst
  int axis = 0;      // kVar: 1..3
  int expo = 0;      // kPow
  NodePtr a, b;
};

namespace {

NodePtr make_leaf(Kind k, int axis = 0, Complex value = {}) {
  auto n = std::make_shared<Node>();
  n->kind = k;
  n->axis = axis;
  n->value = value;
  return n;
}

const NodePtr& zero_node() {
  static NodePtr n = make_leaf(Kind::kConst, 0, Complex{0.0, 0.0});
  return n;
}

const NodePtr& one_node() {
  static NodePtr n = make_leaf(Kind::kConst, 0, Complex{1.0, 0.0});
  return n;
}

NodePtr const_node(Complex c) {
  if (c == Complex{0.0, 0.0}) return zero_node();
  if (c == Complex{1.0, 0.0}) return one_node();
  auto n = std::make_shared<Node>();
  n->kind = Kind::kConst;
  n->value = c;
  return n;
}

bool is_const(const NodePtr& n, Complex* v = nullptr) {
  if (n->kind != Kind::kConst) return false;
  if (v) *v = n->value;
  return true;
}

bool is_zero(const NodePtr& n) {
  return n->kind == Kind::kConst && n->value == Complex{0.0, 0.0};
}

bool is_one(const NodePtr& n) {
  return n->kind == Kind::kConst && n->value == Complex{1.0, 0.0};
}

NodePtr binary(Kind k, NodePtr a, NodePtr b) {
  auto n = std::make_shared<Node>();
  n->kind = k;
  n->a = std::move(a);
  n->b = std::move(b);
  return n;
}

NodePtr add_node(NodePtr a, NodePtr b) {
  Complex ca, cb;
  if (is_zero(a)) return b;
  if (is_zero(b)) return a;
  if (is_const(a, &ca) && is_const(b, &cb)) return const_node(ca + cb);
  return binary(Kind::kAdd, std::move(a), std::move(b));
}

NodePtr mul_node(NodePtr a, NodePtr b);

NodePtr sub_node(NodePtr a, NodePtr b) {
  Complex ca, cb;
  if (is_zero(b)) return a;
  if (is_const(a, &ca) && is_const(b, &cb)) return const_node(ca - cb);
  if (is_zero(a)) return mul_node(const_node({-1.0, 0.0}), std::move(b));
  return binary(Kind::kSub, std::move(a), std::move(b));
}

NodePtr mul_node(NodePtr a, NodePtr b) {
  Complex ca, cb;
  if (is_zero(a) || is_zero(b)) return zero_node();
  if (is_one(a)) return b;
  if (is_one(b)) return a;
  if (is_const(a, &ca) && is_const(b, &cb)) return const_node(ca * cb);
  // keep constants on the left for stable printing
  if (is_const(b) && !is_const(a)) std::swap(a, b);
  return binary(Kind::kMul, std::move(a), std::move(b));
}

NodePtr div_node(NodePtr a, NodePtr b) {
  Complex ca, cb;
  if (is_const(b, &cb)) {
    if (cb == Complex{0.0, 0.0})
      throw std::invalid_argument("division by the constant zero");
    if (is_const(a, &ca)) return const_node(ca / cb);
    if (cb == Complex{1.0, 0.0}) return a;
  }
  if (is_zero(a)) return zero_node();
  return binary(Kind::kDiv, std::move(a), std::move(b));
}

NodePtr pow_node(NodePtr a, int e) {
  if (e == 0) return one_node();
  if (e == 1) return a;
  Complex ca;
  if (is_const(a, &ca)) return const_node(std::pow(ca, e));
  auto n = std::make_shared<Node>();
  n->kind = Kind::kPow;
  n->expo = e;
  n->a = std::move(a);
  return n;
}

NodePtr exp_node(NodePtr a) {
  Complex ca;
  if (is_const(a, &ca)) return const_node(std::exp(ca));
  auto n = std::make_shared<Node>();
  n->kind = Kind::kExp;
  n->a = std::move(a);
  return n;
}

const NodePtr& var_node(int axis) {
  static NodePtr vars[3] = {make_leaf(Kind::kVar, 1), make_leaf(Kind::kVar, 2),
                            make_leaf(Kind::kVar, 3)};
  return vars[axis - 1];
}

const NodePtr& radius_node() {
  static NodePtr n = make_leaf(Kind::kRadR);
  return n;
}

const NodePtr& cyl_radius_node() {
  static NodePtr n = make_leaf(Kind::kRadRho);
  return n;
}

using Memo = std::unordered_map<const Node*, NodePtr>;

NodePtr diff_rec(const NodePtr& n, int axis, Memo& memo) {
  if (auto it = memo.find(n.get()); it != memo.end()) return it->second;
  NodePtr out;
  switch (n->kind) {
    case Kind::kConst:
      out = zero_node();
      break;
    case Kind::kVar:
      out = n->axis == axis ? one_node() : zero_node();
      break;
    case Kind::kRadR:
      // dr/dp^i = p^i / r
      out = div_node(var_node(axis), n);
      break;
    case Kind::kRadRho:
      out = axis == 3 ? zero_node() : div_node(var_node(axis), n);
      break;
    case Kind::kAdd:
      out = add_node(diff_rec(n->a, axis, memo), diff_rec(n->b, axis, memo));
      break;
    case Kind::kSub:
      out = sub_node(diff_rec(n->a, axis, memo), diff_rec(n->b, axis, memo));
      break;
    case Kind::kMul:
      out = add_node(mul_node(diff_rec(n->a, axis, memo), n->b),
                     mul_node(n->a, diff_rec(n->b, axis, memo)));
      break;
    case Kind::kDiv:
      // (a/b)' = a'/b - a b'/b^2
      out = sub_node(div_node(diff_rec(n->a, axis, memo), n->b),
                     div_node(mul_node(n->a, diff_rec(n->b, axis, memo)),
                              pow_node(n->b, 2)));
      break;
    case Kind::kPow:
      out = mul_node(
          mul_node(const_node({double(n->expo), 0.0}), pow_node(n->a, n->expo - 1)),
          diff_rec(n->a, axis, memo));
      break;
    case Kind::kExp:
      out = mul_node(exp_node(n->a), diff_rec(n->a, axis, memo));
      break;
  }
  memo.emplace(n.get(), out);
  return out;
}

NodePtr conj_rec(const NodePtr& n, Memo& memo) {
  if (auto it = memo.find(n.get()); it != memo.end()) return it->second;
  NodePtr out;
  switch (n->kind) {
    case Kind::kConst:
      out = const_node(std::conj(n->value));
      break;
    case Kind::kVar:
    case Kind::kRadR:
    case Kind::kRadRho:
      out = n;
      break;
    case Kind::kAdd:
      out = add_node(conj_rec(n->a, memo), conj_rec(n->b, memo));
      break;
    case Kind::kSub:
      out = sub_node(conj_rec(n->a, memo), conj_rec(n->b, memo));
      break;
    case Kind::kMul:
      out = mul_node(conj_rec(n->a, memo), conj_rec(n->b, memo));
      break;
    case Kind::kDiv:
      out = div_node(conj_rec(n->a, memo), conj_rec(n->b, memo));
      break;
    case Kind::kPow:
      out = pow_node(conj_rec(n->a, memo), n->expo);
      break;
    case Kind::kExp:
      out = exp_node(conj_rec(n->a, memo));
      break;
  }
  memo.emplace(n.get(), out);
  return out;
}

NodePtr neg_rec(const NodePtr& n, Memo& memo) {
  if (auto it = memo.find(n.get()); it != memo.end()) return it->second;
  NodePtr out;
  switch (n->kind) {
    case Kind::kConst:
    case Kind::kRadR:    // even in p
    case Kind::kRadRho:  // even in p
      out = n;
      break;
    case Kind::kVar:
      out = mul_node(const_node({-1.0, 0.0}), var_node(n->axis));
      break;
    case Kind::kAdd:
      out = add_node(neg_rec(n->a, memo), neg_rec(n->b, memo));
      break;
    case Kind::kSub:
      out = sub_node(neg_rec(n->a, memo), neg_rec(n->b, memo));
      break;
    case Kind::kMul:
      out = mul_node(neg_rec(n->a, memo), neg_rec(n->b, memo));
      break;
    case Kind::kDiv:
      out = div_node(neg_rec(n->a, memo), neg_rec(n->b, memo));
      break;
    case Kind::kPow:
      out = pow_node(neg_rec(n->a, memo), n->expo);
      break;
    case Kind::kExp:
      out = exp_node(neg_rec(n->a, memo));
      break;
  }
  memo.emplace(n.get(), out);
  return out;
}

bool equal_rec(const Node* a, const Node* b) {
  if (a == b) return true;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case Kind::kConst: return a->value == b->value;
    case Kind::kVar: return a->axis == b->axis;
    case Kind::kRadR:
    case Kind::kRadRho: return true;
    case Kind::kPow:
      return a->expo == b->expo && equal_rec(a->a.get(), b->a.get());
    case Kind::kExp:
      return equal_rec(a->a.get(), b->a.get());
    default:
      return equal_rec(a->a.get(), b->a.get()) &&
             equal_rec(a->b.get(), b->b.get());
  }
}

std::string fmt_double(double x) {
  if (x == 0.0) x = 0.0;  // normalize -0
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

// precedence: add/sub 1, mul/div 2, pow 3, atoms 4
std::string fmt_const(Complex c) {
  if (c.imag() == 0.0) return fmt_double(c.real());
  if (c.real() == 0.0) {
    if (c.imag() == 1.0) return "i";
    if (c.imag() == -1.0) return "-i";
    return fmt_double(c.imag()) + "i";
  }
  std::string s = "(" + fmt_double(c.real());
  if (c.imag() > 0 || std::isnan(c.imag())) s += "+";
  if (c.imag() == 1.0) return s + "i)";
  if (c.imag() == -1.0) return s + "-i)";
  return s + fmt_double(c.imag()) + "i)";
}

int precedence(const Node* n) {
  switch (n->kind) {
    case Kind::kAdd:
    case Kind::kSub: return 1;
    case Kind::kMul:
    case Kind::kDiv: return 2;
    case Kind::kPow: return 3;
    case Kind::kConst: {
      // negative and genuinely complex constants need parens inside products
      if (n->value.imag() == 0.0 && n->value.real() >= 0.0) return 4;
      if (n->value.real() == 0.0 && n->value.imag() == 1.0) return 4;
      return 0;
    }
    default: return 4;
  }
}

std::string str_rec(const Node* n);

std::string wrap(const Node* n, int parent_prec) {
  std::string s = str_rec(n);
  if (precedence(n) < parent_prec) return "(" + s + ")";
  return s;
}

// right operands that render with a leading minus get parens so products and
// differences stay unambiguous
std::string wrap_rhs(const Node* n, int parent_prec) {
  std::string s = wrap(n, parent_prec);
  if (!s.empty() && s.front() == '-') return "(" + s + ")";
  return s;
}

std::string str_rec(const Node* n) {
  switch (n->kind) {
    case Kind::kConst: return fmt_const(n->value);
    case Kind::kVar: return "p" + std::to_string(n->axis);
    case Kind::kRadR: return "r";
    case Kind::kRadRho: return "rho";
    case Kind::kAdd: return wrap(n->a.get(), 1) + " + " + wrap(n->b.get(), 2);
    case Kind::kSub:
      return wrap(n->a.get(), 1) + " - " + wrap_rhs(n->b.get(), 2);
    case Kind::kMul:
      if (n->a->kind == Kind::kConst && n->a->value == Complex{-1.0, 0.0})
        return "-" + wrap(n->b.get(), 2);
      return wrap(n->a.get(), 2) + "*" + wrap_rhs(n->b.get(), 2);
    case Kind::kDiv: return wrap(n->a.get(), 2) + "/" + wrap_rhs(n->b.get(), 4);
    case Kind::kPow:
      return wrap(n->a.get(), 4) + "^" +
             (n->expo < 0 ? "(" + std::to_string(n->expo) + ")"
                          : std::to_string(n->expo));
    case Kind::kExp: return "exp(" + str_rec(n->a.get()) + ")";
  }
  return "?";
}

}  // namespace
}  // namespace detail

using detail::Kind;
using detail::Node;
using detail::NodePtr;

SingularPointError::SingularPointError(std::string radical, const Point& pt)
    : std::runtime_error("singular point: " + radical + " vanishes at (" +
                         detail::fmt_double(pt[0]) + ", " +
                         detail::fmt_double(pt[1]) + ", " +
                         detail::fmt_double(pt[2]) + ")"),
      radical_(std::move(radical)),
      point_(pt) {}

ScalarExpr::ScalarExpr() : node_(detail::zero_node()) {}

ScalarExpr ScalarExpr::constant(Complex c) {
  return ScalarExpr(detail::const_node(c));
}

ScalarExpr ScalarExpr::i() { return constant(Complex{0.0, 1.0}); }

ScalarExpr ScalarExpr::var(int axis) {
  if (axis < 1 || axis > 3) throw std::invalid_argument("axis must be 1..3");
  return ScalarExpr(detail::var_node(axis));
}

ScalarExpr ScalarExpr::radius() { return ScalarExpr(detail::radius_node()); }

ScalarExpr ScalarExpr::cyl_radius() {
  return ScalarExpr(detail::cyl_radius_node());
}

ScalarExpr ScalarExpr::exp(const ScalarExpr& a) {
  return ScalarExpr(detail::exp_node(a.node_));
}

ScalarExpr ScalarExpr::pow(int n) const {
  return ScalarExpr(detail::pow_node(node_, n));
}

ScalarExpr ScalarExpr::diff(int axis) const {
  if (axis < 1 || axis > 3) throw std::invalid_argument("axis must be 1..3");
  detail::Memo memo;
  return ScalarExpr(detail::diff_rec(node_, axis, memo));
}

ScalarExpr ScalarExpr::conjugate() const {
  detail::Memo memo;
  return ScalarExpr(detail::conj_rec(node_, memo));
}

ScalarExpr ScalarExpr::negate_momentum() const {
  detail::Memo memo;
  return ScalarExpr(detail::neg_rec(node_, memo));
}

bool ScalarExpr::is_zero() const { return detail::is_zero(node_); }

bool ScalarExpr::is_constant(Complex* value) const {
  return detail::is_const(node_, value);
}

std::string ScalarExpr::str() const { return detail::str_rec(node_.get()); }

ScalarExpr operator+(const ScalarExpr& a, const ScalarExpr& b) {
  return ScalarExpr(detail::add_node(a.node_, b.node_));
}
ScalarExpr operator-(const ScalarExpr& a, const ScalarExpr& b) {
  return ScalarExpr(detail::sub_node(a.node_, b.node_));
}
ScalarExpr operator*(const ScalarExpr& a, const ScalarExpr& b) {
  return ScalarExpr(detail::mul_node(a.node_, b.node_));
}
ScalarExpr operator/(const ScalarExpr& a, const ScalarExpr& b) {
  return ScalarExpr(detail::div_node(a.node_, b.node_));
}
ScalarExpr ScalarExpr::operator-() const {
  return ScalarExpr::constant(-1.0) * *this;
}

ScalarExpr operator*(Complex c, const ScalarExpr& e) {
  return ScalarExpr::constant(c) * e;
}
ScalarExpr operator*(double c, const ScalarExpr& e) {
  return ScalarExpr::constant(c) * e;
}

bool expr_equal(const ScalarExpr& a, const ScalarExpr& b) {
  return detail::equal_rec(a.node(), b.node());
}

Complex ScalarExpr::eval(const Point& pt) const {
  const ScalarExpr self = *this;
  CompiledExprSet set(std::span<const ScalarExpr>(&self, 1));
  return set.eval(pt)[0].value;
}

CompiledExprSet::CompiledExprSet(std::span<const ScalarExpr> exprs) {
  std::unordered_map<const Node*, std::int32_t> slot;
  // iterative post-order flattening of the shared DAG
  struct Frame {
    const Node* n;
    bool expanded;
  };
  std::vector<Frame> stack;
  auto flatten = [&](const Node* root) -> std::int32_t {
    stack.push_back({root, false});
    while (!stack.empty()) {
      auto [n, expanded] = stack.back();
      if (slot.count(n)) {
        stack.pop_back();
        continue;
      }
      if (!expanded) {
        stack.back().expanded = true;
        if (n->a) stack.push_back({n->a.get(), false});
        if (n->b) stack.push_back({n->b.get(), false});
        continue;
      }
      stack.pop_back();
      Instr ins;
      ins.op = static_cast<OpCode>(n->kind);
      if (n->a) ins.a = slot.at(n->a.get());
      if (n->b) ins.b = slot.at(n->b.get());
      switch (n->kind) {
        case Kind::kConst: ins.c = n->value; break;
        case Kind::kVar: ins.aux = n->axis; break;
        case Kind::kPow: ins.aux = n->expo; break;
        default: break;
      }
      slot.emplace(n, static_cast<std::int32_t>(program_.size()));
      program_.push_back(ins);
    }
    return slot.at(root);
  };
  roots_.reserve(exprs.size());
  for (const auto& e : exprs) roots_.push_back(flatten(e.node()));
}

void CompiledExprSet::eval(const Point& pt, std::vector<Result>& out) const {
  const double r2 = pt[0] * pt[0] + pt[1] * pt[1] + pt[2] * pt[2];
  const double rho2 = pt[0] * pt[0] + pt[1] * pt[1];
  const double r = std::sqrt(r2);
  const double rho = std::sqrt(rho2);

  auto blame = [&]() -> std::string {
    if (r == 0.0) return "r";
    if (rho == 0.0) return "rho";
    return "denominator";
  };

  thread_local std::vector<Result> reg;
  reg.resize(program_.size());
  for (std::size_t k = 0; k < program_.size(); ++k) {
    const Instr& ins = program_[k];
    Result res;
    switch (ins.op) {
      case OpCode::kConst:
        res = {ins.c, std::abs(ins.c)};
        break;
      case OpCode::kVar: {
        double v = pt[ins.aux - 1];
        res = {Complex{v, 0.0}, std::abs(v)};
        break;
      }
      case OpCode::kRadR:
        res = {Complex{r, 0.0}, r};
        break;
      case OpCode::kRadRho:
        res = {Complex{rho, 0.0}, rho};
        break;
      case OpCode::kAdd:
        res = {reg[ins.a].value + reg[ins.b].value,
               reg[ins.a].scale + reg[ins.b].scale};
        break;
      case OpCode::kSub:
        res = {reg[ins.a].value - reg[ins.b].value,
               reg[ins.a].scale + reg[ins.b].scale};
        break;
      case OpCode::kMul:
        res = {reg[ins.a].value * reg[ins.b].value,
               reg[ins.a].scale * reg[ins.b].scale};
        break;
      case OpCode::kDiv: {
        const Complex den = reg[ins.b].value;
        const double dmag = std::abs(den);
        if (dmag == 0.0) throw SingularPointError(blame(), pt);
        res = {reg[ins.a].value / den, reg[ins.a].scale / dmag};
        break;
      }
      case OpCode::kPow: {
        const Complex base = reg[ins.a].value;
        const int e = ins.aux;
        if (e < 0 && std::abs(base) == 0.0)
          throw SingularPointError(blame(), pt);
        Complex v{1.0, 0.0};
        for (int j = 0; j < std::abs(e); ++j) v *= base;
        if (e < 0) v = 1.0 / v;
        double s;
        if (e >= 0) {
          s = std::pow(reg[ins.a].scale, e);
        } else {
          s = reg[ins.a].scale * std::pow(std::abs(base), e - 1);
        }
        res = {v, s};
        break;
      }
      case OpCode::kExp:
        res = {std::exp(reg[ins.a].value),
               std::exp(std::min(reg[ins.a].scale, 700.0))};
        break;
    }
    reg[k] = res;
  }
  out.resize(roots_.size());
  for (std::size_t k = 0; k < roots_.size(); ++k) out[k] = reg[roots_[k]];
}

std::vector<CompiledExprSet::Result> CompiledExprSet::eval(const Point& pt) const {
  std::vector<Result> out;
  eval(pt, out);
  return out;
}

}  // namespace photonpos
