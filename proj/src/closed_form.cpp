#include "tmprod/closed_form.hpp"

#include "tmprod/errors.hpp"
#include "tmprod/numerics.hpp"

namespace tmprod {

using Kind = ClosedForm::Node::Kind;

ClosedForm::ClosedForm() : ClosedForm(rational(1)) {}

ClosedForm ClosedForm::rational(const Rational& q) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Rational;
  n->value = q;
  return ClosedForm(std::move(n));
}

ClosedForm ClosedForm::constant(Leaf leaf) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Constant;
  n->leaf = leaf;
  return ClosedForm(std::move(n));
}

ClosedForm ClosedForm::from_power_product(const PowerProduct& pp) {
  if (auto q = pp.as_rational()) return rational(*q);
  std::optional<ClosedForm> out;
  for (const auto& [prime, e] : pp.exponents()) {
    ClosedForm factor = rational(Rational(prime));
    if (e != 1) factor = factor.pow(e);
    out = out ? *out * factor : factor;
  }
  return *out;
}

ClosedForm ClosedForm::pow(const Rational& e) const {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Power;
  n->op = Op::Pow;
  n->value = e;
  n->lhs = node_;
  return ClosedForm(std::move(n));
}

namespace {

ClosedForm::Node binary(ClosedForm::Op op) {
  ClosedForm::Node n;
  n.kind = Kind::Binary;
  n.op = op;
  return n;
}

}  // namespace

#define TMPROD_BINARY(symbol, opname)                                 \
  ClosedForm operator symbol(const ClosedForm& a, const ClosedForm& b) { \
    auto n = std::make_shared<ClosedForm::Node>(binary(ClosedForm::Op::opname)); \
    n->lhs = a.node_;                                                  \
    n->rhs = b.node_;                                                  \
    return ClosedForm(std::move(n));                                   \
  }
TMPROD_BINARY(+, Add)
TMPROD_BINARY(-, Sub)
TMPROD_BINARY(*, Mul)
TMPROD_BINARY(/, Div)
#undef TMPROD_BINARY

ClosedForm ClosedForm::lhs() const {
  if (!node_->lhs) throw InputError("closed form node has no left operand");
  return ClosedForm(node_->lhs);
}

ClosedForm ClosedForm::rhs() const {
  if (!node_->rhs) throw InputError("closed form node has no right operand");
  return ClosedForm(node_->rhs);
}

namespace {

BigReal evaluate_node(const ClosedForm::Node& n, Precision wp) {
  switch (n.kind) {
    case Kind::Rational:
      return BigReal(n.value, wp);
    case Kind::Constant:
      switch (n.leaf) {
        case ClosedForm::Leaf::Pi:
          return pi(wp);
        case ClosedForm::Leaf::GammaQuarter:
          return constant(ConstantName::GammaQuarter, wp);
        case ClosedForm::Leaf::ExpEulerGamma: {
          Precision gp{std::min(wp.digits, kEulerGammaDigits)};
          return exp(constant(ConstantName::EulerGamma, gp).rounded(wp));
        }
      }
      break;
    case Kind::Power: {
      BigReal base = evaluate_node(*n.lhs, wp);
      if (base.sign() < 0 && boost::multiprecision::denominator(n.value) != 1) {
        throw EvaluationError("fractional power of a negative value");
      }
      if (base.is_zero() && n.value <= 0) throw EvaluationError("division by zero");
      return tmprod::pow(base, n.value);
    }
    case Kind::Binary: {
      BigReal a = evaluate_node(*n.lhs, wp);
      BigReal b = evaluate_node(*n.rhs, wp);
      switch (n.op) {
        case ClosedForm::Op::Add:
          return a + b;
        case ClosedForm::Op::Sub:
          return a - b;
        case ClosedForm::Op::Mul:
          return a * b;
        case ClosedForm::Op::Div:
          if (b.is_zero()) throw EvaluationError("division by zero");
          return a / b;
        case ClosedForm::Op::Pow:
          break;
      }
      break;
    }
  }
  throw EvaluationError("malformed closed form");
}

int precedence(const ClosedForm::Node& n) {
  if (n.kind == Kind::Binary) {
    return (n.op == ClosedForm::Op::Add || n.op == ClosedForm::Op::Sub) ? 1 : 2;
  }
  if (n.kind == Kind::Rational &&
      (boost::multiprecision::denominator(n.value) != 1 || n.value < 0)) {
    return 2;  // "3/4" or "-2" behave like a product under ^
  }
  return 3;
}

std::string render_node(const ClosedForm::Node& n) {
  switch (n.kind) {
    case Kind::Rational:
      return to_string(n.value);
    case Kind::Constant:
      return std::string(to_string(n.leaf));
    case Kind::Power: {
      std::string base = render_node(*n.lhs);
      if (precedence(*n.lhs) < 3) base = "(" + base + ")";
      return base + "^(" + to_string(n.value) + ")";
    }
    case Kind::Binary: {
      const int p = precedence(n);
      std::string a = render_node(*n.lhs);
      std::string b = render_node(*n.rhs);
      if (precedence(*n.lhs) < p) a = "(" + a + ")";
      // Right operand of - and / needs parentheses at equal precedence.
      const bool strict = n.op == ClosedForm::Op::Sub || n.op == ClosedForm::Op::Div;
      if (precedence(*n.rhs) < p || (strict && precedence(*n.rhs) == p)) b = "(" + b + ")";
      return a + std::string(to_string(n.op)) + b;
    }
  }
  return "?";
}

std::optional<PowerProduct> power_product_of(const ClosedForm::Node& n) {
  switch (n.kind) {
    case Kind::Rational:
      if (n.value <= 0) return std::nullopt;
      return PowerProduct::from_rational(n.value);
    case Kind::Constant:
      return std::nullopt;
    case Kind::Power: {
      auto base = power_product_of(*n.lhs);
      if (!base) return std::nullopt;
      return base->pow(n.value);
    }
    case Kind::Binary: {
      if (n.op != ClosedForm::Op::Mul && n.op != ClosedForm::Op::Div) return std::nullopt;
      auto a = power_product_of(*n.lhs);
      auto b = power_product_of(*n.rhs);
      if (!a || !b) return std::nullopt;
      return n.op == ClosedForm::Op::Mul ? *a * *b : *a * b->pow(Rational(-1));
    }
  }
  return std::nullopt;
}

bool uses_euler_gamma(const ClosedForm::Node& n) {
  if (n.kind == Kind::Constant) return n.leaf == ClosedForm::Leaf::ExpEulerGamma;
  return (n.lhs && uses_euler_gamma(*n.lhs)) || (n.rhs && uses_euler_gamma(*n.rhs));
}

}  // namespace

BigReal ClosedForm::evaluate(Precision p) const {
  if (p.digits > kEulerGammaDigits && uses_euler_gamma(*node_)) {
    throw CapabilityError("exp(euler_gamma) is limited to " +
                          std::to_string(kEulerGammaDigits) + " digits");
  }
  return evaluate_node(*node_, p.plus(kGuardDigits)).rounded(p);
}

std::string ClosedForm::render() const { return render_node(*node_); }

std::optional<PowerProduct> ClosedForm::as_power_product() const {
  return power_product_of(*node_);
}

std::string_view to_string(ClosedForm::Leaf leaf) {
  switch (leaf) {
    case ClosedForm::Leaf::Pi:
      return "pi";
    case ClosedForm::Leaf::GammaQuarter:
      return "Gamma(1/4)";
    case ClosedForm::Leaf::ExpEulerGamma:
      return "exp(euler_gamma)";
  }
  return "?";
}

std::string_view to_string(ClosedForm::Op op) {
  switch (op) {
    case ClosedForm::Op::Add:
      return "+";
    case ClosedForm::Op::Sub:
      return "-";
    case ClosedForm::Op::Mul:
      return "*";
    case ClosedForm::Op::Div:
      return "/";
    case ClosedForm::Op::Pow:
      return "^";
  }
  return "?";
}

}  // namespace tmprod
