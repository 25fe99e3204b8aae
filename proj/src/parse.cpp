// Recursive-descent parser for factor expressions such as
// "4(n+2)(2n+1)^3(2n+3)^3/((n+3)(n+1)^2(4n+3)^4)".

#include <cctype>
#include <string>
#include <vector>

#include "tmprod/errors.hpp"
#include "tmprod/factored_rational.hpp"

namespace tmprod {
namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  FactoredRational parse() {
    std::vector<RawFactor> factors;
    skip_ws();
    if (at_end()) fail("empty expression");
    parse_terms(factors, /*sign=*/1);
    skip_ws();
    if (peek() == '/') {
      ++pos_;
      parse_denominator(factors);
    }
    skip_ws();
    if (!at_end()) fail("unexpected character '" + std::string(1, peek()) + "'");
    try {
      return FactoredRational::normalize(factors);
    } catch (const InputError& e) {
      throw ParseError(e.what(), 0);
    }
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  // '-' or U+2212 (E2 88 92).
  bool take_minus() {
    if (peek() == '-') {
      ++pos_;
      return true;
    }
    if (text_.substr(pos_, 3) == "\xE2\x88\x92") {
      pos_ += 3;
      return true;
    }
    return false;
  }

  bool starts_term() {
    skip_ws();
    return peek() == '(' || std::isdigit(static_cast<unsigned char>(peek()));
  }

  void parse_terms(std::vector<RawFactor>& out, int sign) {
    if (!starts_term()) fail("expected a factor");
    while (starts_term()) parse_term(out, sign);
  }

  void parse_denominator(std::vector<RawFactor>& out) {
    skip_ws();
    // "/(" may open a parenthesized list of terms or a single "(linear)"
    // factor; try the list first.
    if (peek() == '(') {
      const std::size_t save = pos_;
      const std::size_t before = out.size();
      try {
        ++pos_;
        parse_terms(out, -1);
        skip_ws();
        if (peek() != ')') fail("expected ')'");
        ++pos_;
        return;
      } catch (const ParseError& list_error) {
        out.resize(before);
        pos_ = save;
        try {
          parse_term(out, -1);
          return;
        } catch (const ParseError& term_error) {
          // Report whichever reading got further.
          if (list_error.position() > term_error.position()) throw list_error;
          throw;
        }
      }
    }
    parse_term(out, -1);
  }

  void parse_term(std::vector<RawFactor>& out, int sign) {
    skip_ws();
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      const std::size_t at = pos_;
      BigInt k = parse_integer();
      if (k == 0) {
        pos_ = at;
        fail("zero constant factor");
      }
      out.push_back({Rational(0), Rational(k), sign});
      return;
    }
    if (peek() != '(') fail("expected '(' or an integer");
    ++pos_;
    RawFactor f = parse_linear();
    skip_ws();
    if (peek() != ')') fail("expected ')'");
    ++pos_;
    skip_ws();
    int power = 1;
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      const bool negative = take_minus();
      skip_ws();
      const std::size_t at = pos_;
      BigInt e = parse_integer();
      if (e == 0 || e > 10000) {
        pos_ = at;
        fail("exponent must be a nonzero integer of moderate size");
      }
      power = e.convert_to<int>() * (negative ? -1 : 1);
    }
    f.multiplicity = power * sign;
    out.push_back(f);
  }

  RawFactor parse_linear() {
    skip_ws();
    const std::size_t at = pos_;
    const bool negative = take_minus();
    skip_ws();
    Rational coeff = 1;
    bool has_number = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = parse_rational_literal();
      has_number = true;
    }
    skip_ws();
    if (peek() == 'n') {
      ++pos_;
      if (negative || coeff == 0) {
        pos_ = at;
        fail("leading coefficient must be positive");
      }
      skip_ws();
      Rational constant = 0;
      if (peek() == '+') {
        ++pos_;
        skip_ws();
        constant = parse_rational_literal();
      } else if (take_minus()) {
        skip_ws();
        constant = -parse_rational_literal();
      }
      return {coeff, constant, 1};
    }
    if (!has_number) fail("expected 'n' or a number");
    if (negative || coeff == 0) {
      pos_ = at;
      fail("constant factor must be positive");
    }
    return {Rational(0), coeff, 1};
  }

  Rational parse_rational_literal() {
    BigInt num = parse_integer();
    skip_ws();
    // A '/' followed by a digit continues the rational; otherwise it belongs
    // to an outer level.
    if (peek() == '/') {
      std::size_t look = pos_ + 1;
      while (look < text_.size() && std::isspace(static_cast<unsigned char>(text_[look]))) ++look;
      if (look < text_.size() && std::isdigit(static_cast<unsigned char>(text_[look]))) {
        pos_ = look;
        const std::size_t at = pos_;
        BigInt den = parse_integer();
        if (den == 0) {
          pos_ = at;
          fail("zero denominator");
        }
        return Rational(num, den);
      }
    }
    return Rational(num);
  }

  BigInt parse_integer() {
    const std::size_t begin = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (begin == pos_) fail("expected an integer");
    return decimal_integer(text_.substr(begin, pos_ - begin));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

FactoredRational parse_factored(std::string_view text) { return Parser(text).parse(); }

}  // namespace tmprod
