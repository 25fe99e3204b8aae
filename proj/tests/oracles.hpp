#pragma once

// Reference implementations for the tests, written independently of the
// library: definitions by string manipulation, naive double-precision
// products and direct MPFR calls.

#include <mpfr.h>

#include <cmath>
#include <cstdint>
#include <functional>
#include <string>

#include "tmprod/bigreal.hpp"

namespace oracle {

inline std::string base_digits(std::uint64_t n, unsigned base) {
  std::string s;
  while (n > 0) {
    s.insert(s.begin(), "0123456789abcdefghijklmnopqrstuvwxyz"[n % base]);
    n /= base;
  }
  return s;
}

/// Occurrences of `word`, overlaps allowed, in the base expansion of n.
inline unsigned count_occurrences(std::uint64_t n, unsigned base, const std::string& word) {
  const std::string digits = base_digits(n, base);
  unsigned count = 0;
  for (std::size_t i = 0; i + word.size() <= digits.size(); ++i) {
    if (digits.compare(i, word.size(), word) == 0) ++count;
  }
  return count;
}

inline int thue_morse(std::uint64_t n) { return count_occurrences(n, 2, "1") % 2; }
inline int rudin_shapiro(std::uint64_t n) { return count_occurrences(n, 2, "11") % 2; }

/// prod_{n=start}^{last} R(n)^{e(n)} in double precision (log space).
inline double naive_product(const std::function<double(std::int64_t)>& r,
                            const std::function<int(std::int64_t)>& e, std::int64_t start,
                            std::int64_t last) {
  double sum = 0;
  for (std::int64_t n = start; n <= last; ++n) sum += e(n) * std::log(r(n));
  return std::exp(sum);
}

/// |x - y| for a BigReal and a decimal literal.
inline double distance(const tmprod::BigReal& x, const char* literal) {
  tmprod::BigReal y(std::string_view(literal), tmprod::Precision{120});
  y -= x;
  return std::fabs(y.to_double());
}

inline double distance(const tmprod::BigReal& x, const tmprod::BigReal& y) {
  tmprod::BigReal d = x;
  d -= y;
  return std::fabs(d.to_double());
}

/// Gamma(num/den) straight from MPFR, as a decimal string.
inline std::string mpfr_gamma_string(long num, long den, int digits) {
  const mpfr_prec_t bits = static_cast<mpfr_prec_t>(digits * 3.33) + 64;
  mpfr_t x;
  mpfr_init2(x, bits);
  mpfr_set_si(x, num, MPFR_RNDN);
  mpfr_div_si(x, x, den, MPFR_RNDN);
  mpfr_gamma(x, x, MPFR_RNDN);
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Re", digits + 5, x);
  std::string out(buf);
  mpfr_free_str(buf);
  mpfr_clear(x);
  return out;
}

inline std::string mpfr_euler_string(int digits) {
  mpfr_t x;
  mpfr_init2(x, static_cast<mpfr_prec_t>(digits * 3.33) + 64);
  mpfr_const_euler(x, MPFR_RNDN);
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Re", digits + 5, x);
  std::string out(buf);
  mpfr_free_str(buf);
  mpfr_clear(x);
  return out;
}

}  // namespace oracle
