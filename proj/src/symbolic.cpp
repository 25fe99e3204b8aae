#include "tmprod/symbolic.hpp"

#include <cctype>
#include <set>
#include <vector>

#include "tmprod/errors.hpp"

namespace tmprod {
namespace {

bool is_negative_integer(const Rational& x) {
  return x < 0 && boost::multiprecision::denominator(x) == 1;
}

void accumulate(std::map<Rational, Rational>& into, const Rational& key, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = into.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) into.erase(it);
  }
}

std::string coefficient_prefix(const Rational& c, bool first) {
  std::string s;
  const Rational mag = c < 0 ? Rational(-c) : c;
  if (first) {
    if (c < 0) s += "-";
  } else {
    s += c < 0 ? " - " : " + ";
  }
  if (mag != 1) s += to_string(mag) + "*";
  return s;
}

using SparseVector = std::map<Rational, Rational>;  // point -> coefficient

// Incremental echelon basis of relation vectors over Q, with each basis
// vector's expression as a combination of the inserted relations.
class RelationBasis {
 public:
  void insert(const Rational& x) {
    SparseVector v;
    accumulate(v, x / 2, Rational(1));
    accumulate(v, (x + 1) / 2, Rational(-1));
    accumulate(v, x, Rational(-1));
    SparseVector combo{{x, Rational(1)}};
    eliminate(v, combo);
    if (v.empty()) return;  // dependent
    // Pivot on the largest point.
    const Rational pivot = v.rbegin()->first;
    const Rational scale = Rational(1) / v.rbegin()->second;
    for (auto& [k, c] : v) c *= scale;
    for (auto& [k, c] : combo) c *= scale;
    rows_.push_back({pivot, std::move(v), std::move(combo)});
  }

  // Reduces `v` in insertion order; `combo` collects the relations used.
  void eliminate(SparseVector& v, SparseVector& combo) const {
    for (const Row& row : rows_) {
      auto it = v.find(row.pivot);
      if (it == v.end()) continue;
      const Rational factor = it->second;
      for (const auto& [k, c] : row.vector) accumulate(v, k, -factor * c);
      for (const auto& [k, c] : row.combo) accumulate(combo, k, -factor * c);
    }
  }

 private:
  struct Row {
    Rational pivot;
    SparseVector vector;
    SparseVector combo;
  };
  std::vector<Row> rows_;
};

}  // namespace

GExpression& GExpression::add_g(const Rational& point, const Rational& coeff) {
  if (is_negative_integer(point)) {
    throw InputError("G is undefined at the negative integer " + to_string(point));
  }
  accumulate(terms_, point, coeff);
  return *this;
}

GExpression& GExpression::add_log(const Rational& q, const Rational& coeff) {
  if (q <= 0) throw InputError("log of a nonpositive rational " + to_string(q));
  if (q != 1) accumulate(logs_, q, coeff);
  return *this;
}

GExpression& GExpression::operator+=(const GExpression& other) {
  for (const auto& [x, c] : other.terms_) accumulate(terms_, x, c);
  for (const auto& [q, c] : other.logs_) accumulate(logs_, q, c);
  return *this;
}

GExpression& GExpression::operator-=(const GExpression& other) {
  return *this += other.scaled(Rational(-1));
}

GExpression GExpression::scaled(const Rational& c) const {
  GExpression out;
  if (c == 0) return out;
  for (const auto& [x, k] : terms_) out.terms_.emplace(x, k * c);
  for (const auto& [q, k] : logs_) out.logs_.emplace(q, k * c);
  return out;
}

PowerProduct GExpression::constant_part() const {
  PowerProduct p;
  for (const auto& [q, c] : logs_) p *= PowerProduct::from_rational(q).pow(c);
  return p;
}

std::string GExpression::render() const {
  std::string out;
  for (const auto& [x, c] : terms_) {
    out += coefficient_prefix(c, out.empty()) + "G(" + to_string(x) + ")";
  }
  for (const auto& [q, c] : logs_) {
    out += coefficient_prefix(c, out.empty()) + "log(" + to_string(q) + ")";
  }
  return out.empty() ? "0" : out;
}

GExpression relation(const Rational& x) {
  if (x <= -1) throw InputError("the functional equation is used for x > -1 only");
  GExpression r;
  r.add_g(x / 2, Rational(1)).add_g((x + 1) / 2, Rational(-1)).add_g(x, Rational(-1));
  r.add_log(Rational(x + 1), Rational(-1));
  return r;
}

GExpression expr_from_spec(const ProductSpec& spec) {
  if (spec.kind != ExponentKind::PmThue) {
    throw InputError("symbolic form exists for +-1 Thue-Morse products only");
  }
  validate(spec);
  GExpression out;
  if (spec.start == 0) out.add_log(spec.rational.value_at(Rational(0)), Rational(1));
  for (const auto& f : spec.rational.factors()) out.add_g(f.offset, Rational(f.multiplicity));
  return out;
}

Reduction reduce(const GExpression& expr, int depth) {
  if (depth < 0) throw InputError("reduce depth must be >= 0");
  Reduction result;
  if (!expr.has_terms()) {
    result.reduced = true;
    result.constant = expr.constant_part();
    return result;
  }

  RelationBasis basis;
  std::set<Rational> visited;
  std::vector<Rational> frontier;
  for (const auto& [x, c] : expr.terms()) {
    if (x > -1 && visited.insert(x).second) frontier.push_back(x);
  }
  for (int level = 0; level <= depth; ++level) {
    if (level > 0) {
      std::vector<Rational> next;
      for (const Rational& x : frontier) {
        for (const Rational& y : {Rational(2 * x), Rational(2 * x - 1), Rational(x / 2),
                                  Rational((x + 1) / 2)}) {
          if (y > -1 && visited.insert(y).second) next.push_back(y);
        }
      }
      frontier = std::move(next);
    }
    for (const Rational& x : frontier) basis.insert(x);

    SparseVector target = expr.terms();
    SparseVector combo;
    basis.eliminate(target, combo);
    result.depth = level;
    if (target.empty()) {
      // terms = sum_y (-combo_y) * (relation vector r_y); each relation
      // vector equals log(1+y), so the G part is sum_y -combo_y log(1+y).
      result.reduced = true;
      result.constant = expr.constant_part();
      for (const auto& [y, c] : combo) {
        result.certificate.emplace(y, -c);
        result.constant *= PowerProduct::from_rational(Rational(y + 1)).pow(Rational(-c));
      }
      return result;
    }
    if (level == depth) {
      for (const auto& [x, c] : target) result.residual.add_g(x, c);
    }
    if (frontier.empty()) {
      for (const auto& [x, c] : target) result.residual.add_g(x, c);
      break;
    }
  }
  return result;
}

}  // namespace tmprod

namespace tmprod {
namespace {

class GParser {
 public:
  explicit GParser(std::string_view text) : text_(text) {}

  GExpression parse() {
    GExpression out;
    skip();
    if (pos_ == text_.size()) fail("empty expression");
    bool first = true;
    while (pos_ < text_.size()) {
      Rational sign(1);
      if (accept('+')) {
      } else if (accept('-')) {
        sign = -1;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      term(out, sign);
      first = false;
    }
    return out;
  }

 private:
  void term(GExpression& out, const Rational& sign) {
    Rational coeff(1);
    if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      coeff = number();
      accept('*');
    }
    if (keyword("G(")) {
      const Rational x = signed_number();
      expect(')');
      try {
        out.add_g(x, sign * coeff);
      } catch (const InputError& e) {
        fail(e.what());
      }
    } else if (keyword("log(")) {
      const std::size_t at = pos_;
      const Rational q = number();
      expect(')');
      if (q <= 0) throw ParseError("log argument must be positive", at);
      out.add_log(q, sign * coeff);
    } else {
      fail("expected G(...) or log(...)");
    }
  }

  Rational signed_number() {
    skip();
    const bool negative = accept('-');
    const Rational q = number();
    return negative ? Rational(-q) : q;
  }

  Rational number() {
    skip();
    const std::size_t begin = pos_;
    while (pos_ < text_.size() &&
           (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '/' ||
            text_[pos_] == '.')) {
      ++pos_;
    }
    Rational q;
    if (begin == pos_ || !parse_rational(text_.substr(begin, pos_ - begin), q)) {
      pos_ = begin;
      fail("expected a rational number");
    }
    skip();
    return q;
  }

  bool keyword(std::string_view word) {
    skip();
    if (text_.substr(pos_, word.size()) != word) return false;
    pos_ += word.size();
    return true;
  }

  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      skip();
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

GExpression parse_gexpression(std::string_view text) { return GParser(text).parse(); }

}  // namespace tmprod
