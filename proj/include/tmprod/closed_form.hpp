#pragma once

// Expression trees for the right-hand sides of the identities. Leaves are
// exact rationals or one of three named constants; Gamma(3/4) is written
// through the reflection formula as pi * sqrt(2) / Gamma(1/4) so a single
// Gamma leaf suffices.

#include <memory>
#include <optional>
#include <string>

#include "tmprod/bigreal.hpp"
#include "tmprod/power_product.hpp"

namespace tmprod {

class ClosedForm {
 public:
  enum class Leaf { Pi, GammaQuarter, ExpEulerGamma };
  enum class Op { Add, Sub, Mul, Div, Pow };

  /// The rational 1.
  ClosedForm();
  static ClosedForm rational(const Rational& q);
  static ClosedForm constant(Leaf leaf);
  static ClosedForm from_power_product(const PowerProduct& pp);

  ClosedForm pow(const Rational& e) const;
  friend ClosedForm operator+(const ClosedForm& a, const ClosedForm& b);
  friend ClosedForm operator-(const ClosedForm& a, const ClosedForm& b);
  friend ClosedForm operator*(const ClosedForm& a, const ClosedForm& b);
  friend ClosedForm operator/(const ClosedForm& a, const ClosedForm& b);

  /// Bottom-up evaluation at p + kGuardDigits, rounded to p. Throws
  /// EvaluationError on division by zero or a nonpositive base raised to a
  /// fractional power. ExpEulerGamma limits p to the stored digits of Euler's
  /// constant.
  BigReal evaluate(Precision p) const;

  /// Infix rendering, fully deterministic: "pi^(3/4)*2^(1/2)/Gamma(1/4)".
  std::string render() const;

  /// Defined when the tree uses only rationals, *, / and pow.
  std::optional<PowerProduct> as_power_product() const;

  // Structural access (serialization).
  struct Node;
  const Node& node() const { return *node_; }
  /// Left operand of a binary node or base of a power; right operand of a
  /// binary node.
  ClosedForm lhs() const;
  ClosedForm rhs() const;

 private:
  explicit ClosedForm(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct ClosedForm::Node {
  enum class Kind { Rational, Constant, Binary, Power } kind;
  tmprod::Rational value;      // Rational leaf value, or Power exponent
  Leaf leaf = Leaf::Pi;        // Constant leaf
  Op op = Op::Mul;             // Binary / Power
  std::shared_ptr<const Node> lhs;
  std::shared_ptr<const Node> rhs;
};

std::string_view to_string(ClosedForm::Leaf leaf);
std::string_view to_string(ClosedForm::Op op);

}  // namespace tmprod
