#pragma once

// Identities: a product specification paired with its exact right-hand side,
// the four parametric families and the fixed catalog, plus verification.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tmprod/closed_form.hpp"
#include "tmprod/evaluator.hpp"
#include "tmprod/symbolic.hpp"

namespace tmprod {

struct Identity {
  std::string name;
  ProductSpec spec;
  ClosedForm closed_form;
  /// How the identity arises (derivation note).
  std::string provenance;
};

enum class Family { I, II, III, IV };

std::string_view to_string(Family f);
/// "i", "ii", "iii", "iv" (case-insensitive). Throws InputError.
Family family_from_string(std::string_view text);

/// Instance of a parametric +-1 Thue-Morse family, start 1:
///   (i)   (n+a)(2n+a+1)(2n+b) / ((2n+a)(n+b)(2n+b+1))  = (b+1)/(a+1)
///   (ii)  b = a+1:                                       (a+2)/(a+1)
///   (iii) b = 0:                                         1/(a+1)
///   (iv)  (2n+a+1)(2n+2a-1) / ((2n+a)(2n+4a-2))          = 2a/(a+1)
/// `b` is used by (i) only (required there, rejected elsewhere). Negative
/// integer parameters are excluded, and for (iv) also the negative
/// half-integers. Parameters making a factor nonpositive for n >= 1 fall
/// outside the real-log domain and are rejected as well. Throws InputError.
Identity family(Family id, const Rational& a, const std::optional<Rational>& b = std::nullopt);

/// The exact right-hand side of a family instance.
Rational family_value(Family id, const Rational& a, const std::optional<Rational>& b = std::nullopt);

/// The 18 fixed identities in a stable order.
const std::vector<Identity>& catalog();

/// Looks up a catalog entry by name; "C3a" is an alias of "WR".
std::optional<Identity> find_identity(std::string_view name);

struct SymbolicCheck {
  bool reduced = false;
  int depth = 0;
  /// Rendered constant from reduce (empty when not reduced).
  std::string constant;
  /// Whether the closed form is a rational power product at all.
  bool comparable = false;
  /// reduced && comparable && constants equal exactly.
  bool matches = false;
};

struct VerifyReport {
  std::string name;
  BigReal computed;
  BigReal expected;
  BigReal abs_error;
  BigReal error_estimate;
  BigReal tolerance;
  bool pass = false;
  std::optional<SymbolicCheck> symbolic;
  /// Set when the evaluation itself failed; pass is then false.
  std::string failure;
};

/// Evaluates the product and the closed form. The tolerance defaults to ten
/// times the error estimate; pass iff |computed - expected| <=
/// max(tolerance, error estimate), and, for +-1 Thue-Morse identities whose
/// closed form is a rational power product, the symbolic reduction (if it
/// succeeds) gives exactly that constant. Never throws for mathematical
/// failures; they are reported.
VerifyReport verify(const Identity& identity, const EvalOptions& opts,
                    const std::optional<BigReal>& tolerance = std::nullopt);

/// verify() over several identities, concurrently when the arithmetic
/// library is thread-safe; results keep the input order.
std::vector<VerifyReport> verify_all(const std::vector<Identity>& identities,
                                     const EvalOptions& opts,
                                     const std::optional<BigReal>& tolerance = std::nullopt);

}  // namespace tmprod
