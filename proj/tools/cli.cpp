#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "tmprod/analysis.hpp"
#include "tmprod/catalog.hpp"
#include "tmprod/errors.hpp"
#include "tmprod/serialize.hpp"

namespace tmprod::cli {
namespace {

using nlohmann::json;

/// Bad command-line usage detected after CLI11 parsing (exit 2).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { Text, Json, Csv };

struct Globals {
  int digits = 60;
  int split_levels = 8;
  std::optional<std::int64_t> terms;
  int rs_moments = 4;
  std::string format = "text";
  std::string output;

  Format fmt() const {
    if (format == "json") return Format::Json;
    if (format == "csv") return Format::Csv;
    return Format::Text;
  }

  EvalOptions options() const {
    EvalOptions o;
    o.precision = Precision{digits};
    o.split_levels = split_levels;
    o.terms = terms;
    o.rs_moments = rs_moments;
    o.check();
    return o;
  }
};

Rational rational_arg(const std::string& text, const char* what) {
  Rational q;
  if (!parse_rational(text, q)) {
    throw UsageError(std::string("invalid rational for ") + what + ": '" + text + "'");
  }
  return q;
}

ExponentKind kind_arg(const std::string& text) {
  const auto kind = exponent_kind_from_string(text);
  if (!kind) throw UsageError("unknown kind '" + text + "' (expected pm-t, t, pm-v, v or plain)");
  return *kind;
}

std::string sci(const BigReal& x) { return x.to_string(3); }

void print_eval_text(std::ostream& os, const EvalResult& r, int digits) {
  os << r.value.to_string(digits) << "\n"
     << "error_estimate: " << sci(r.error_estimate) << "\n"
     << "terms: " << r.terms_used << "\n"
     << "split_levels: " << r.split_levels << "\n";
}

void print_eval(std::ostream& os, const EvalResult& r, const Globals& g) {
  switch (g.fmt()) {
    case Format::Text:
      print_eval_text(os, r, g.digits);
      break;
    case Format::Json:
      os << to_json(r, g.digits).dump(2) << "\n";
      break;
    case Format::Csv:
      os << "value,error_estimate,terms_used,split_levels\n"
         << r.value.to_string(g.digits) << "," << sci(r.error_estimate) << "," << r.terms_used
         << "," << r.split_levels << "\n";
      break;
  }
}

// ---- seq -----------------------------------------------------------------

int cmd_seq(std::ostream& os, const Globals& g, const std::string& kind_text, std::int64_t count,
            const std::string& word, unsigned base) {
  if (count < 1) throw UsageError("--count must be >= 1");
  std::vector<int> values;
  values.reserve(static_cast<std::size_t>(count));
  if (kind_text == "block") {
    if (word.empty()) throw UsageError("seq block needs --word");
    const DigitWord w = parse_digit_word(word, base);
    for (std::int64_t n = 0; n < count; ++n) {
      values.push_back(static_cast<int>(block_parity(w, base, static_cast<std::uint64_t>(n))));
    }
  } else {
    const ExponentKind kind = kind_arg(kind_text);
    if (kind == ExponentKind::Plain) throw UsageError("seq needs t, v, pm-t, pm-v or block");
    for (std::int64_t n = 0; n < count; ++n) {
      values.push_back(exponent(kind, static_cast<std::uint64_t>(n)));
    }
  }
  switch (g.fmt()) {
    case Format::Text:
      for (std::size_t i = 0; i < values.size(); ++i) os << (i ? " " : "") << values[i];
      os << "\n";
      break;
    case Format::Json:
      os << json{{"kind", kind_text}, {"values", values}}.dump() << "\n";
      break;
    case Format::Csv:
      os << "n,value\n";
      for (std::size_t i = 0; i < values.size(); ++i) os << i << "," << values[i] << "\n";
      break;
  }
  return kExitOk;
}

// ---- verify --------------------------------------------------------------

int cmd_verify(std::ostream& os, const Globals& g, const std::vector<std::string>& names, bool all,
               const std::string& family_name, const std::string& a_text,
               const std::string& b_text, const std::string& tolerance_text) {
  std::vector<Identity> ids;
  if (all) {
    if (!names.empty() || !family_name.empty()) throw UsageError("--all takes no names");
    ids = catalog();
  }
  for (const std::string& name : names) {
    auto id = find_identity(name);
    if (!id) throw UsageError("unknown identity '" + name + "' (see `tmprod catalog`)");
    ids.push_back(*id);
  }
  if (!family_name.empty()) {
    if (a_text.empty()) throw UsageError("--family needs --a");
    std::optional<Rational> b;
    if (!b_text.empty()) b = rational_arg(b_text, "--b");
    ids.push_back(family(family_from_string(family_name), rational_arg(a_text, "--a"), b));
  }
  if (ids.empty()) throw UsageError("verify needs an identity name, --all or --family");

  const EvalOptions opts = g.options();
  std::optional<BigReal> tolerance;
  if (!tolerance_text.empty()) {
    try {
      tolerance = BigReal(std::string_view(tolerance_text), opts.precision);
    } catch (const Error&) {
      throw UsageError("invalid --tolerance '" + tolerance_text + "'");
    }
    if (tolerance->sign() < 0) throw UsageError("--tolerance must be >= 0");
  }
  const std::vector<VerifyReport> reports = verify_all(ids, opts, tolerance);
  const bool all_pass =
      std::all_of(reports.begin(), reports.end(), [](const VerifyReport& r) { return r.pass; });
  const int shown = std::min(g.digits, 30);

  switch (g.fmt()) {
    case Format::Text: {
      os << "name      status  abs_error   estimate    symbolic     computed\n";
      for (const VerifyReport& r : reports) {
        std::string sym = "-";
        if (r.symbolic) {
          if (!r.symbolic->reduced) sym = "irreducible";
          else if (!r.symbolic->comparable) sym = "reduced";
          else sym = r.symbolic->matches ? "exact" : "MISMATCH";
        }
        std::ostringstream line;
        line << r.name;
        auto pad = [&line](std::size_t width) {
          const std::size_t len = static_cast<std::size_t>(line.tellp());
          line << std::string(len < width ? width - len : 1, ' ');
        };
        pad(10);
        line << (r.pass ? "pass" : "FAIL");
        pad(18);
        if (r.failure.empty()) {
          line << sci(r.abs_error);
          pad(30);
          line << sci(r.error_estimate);
          pad(42);
          line << sym;
          pad(55);
          line << r.computed.to_string(shown);
        } else {
          line << "error: " << r.failure;
        }
        os << line.str() << "\n";
      }
      os << reports.size() << " checked, "
         << std::count_if(reports.begin(), reports.end(), [](const auto& r) { return r.pass; })
         << " passed\n";
      break;
    }
    case Format::Json: {
      json rows = json::array();
      for (const VerifyReport& r : reports) rows.push_back(to_json(r, g.digits));
      os << rows.dump(2) << "\n";
      break;
    }
    case Format::Csv:
      os << "name,computed,expected,abs_error,error_estimate,pass\n";
      for (const VerifyReport& r : reports) {
        os << r.name << "," << r.computed.to_string(g.digits) << ","
           << r.expected.to_string(g.digits) << "," << sci(r.abs_error) << ","
           << sci(r.error_estimate) << "," << (r.pass ? "true" : "false") << "\n";
      }
      break;
  }
  return all_pass ? kExitOk : kExitMath;
}

// ---- constants -----------------------------------------------------------

int cmd_constants(std::ostream& os, const Globals& g, const std::string& name) {
  if (name != "g0" && name != "fm-R" && name != "fm-phi") {
    throw UsageError("unknown constant '" + name + "' (expected g0, fm-R or fm-phi)");
  }
  const EvalOptions opts = g.options();
  if (name == "g0") {
    print_eval(os, g_value(Rational(0), opts), g);
    return kExitOk;
  }
  const FlajoletMartin fm = flajolet_martin(opts);
  if (name == "fm-R") {
    switch (g.fmt()) {
      case Format::Text:
        print_eval_text(os, fm.R, g.digits);
        os << "R*g(0) = " << fm.product.to_string(std::min(g.digits, 30)) << " ± "
           << sci(fm.product_error) << "\n";
        break;
      case Format::Json:
        os << json{{"R", to_json(fm.R, g.digits)},
                   {"g0", to_json(fm.g0, g.digits)},
                   {"R_times_g0", fm.product.to_string(g.digits)},
                   {"R_times_g0_error", sci(fm.product_error)}}
                  .dump(2)
           << "\n";
        break;
      case Format::Csv:
        os << "name,value,error_estimate\n"
           << "fm-R," << fm.R.value.to_string(g.digits) << "," << sci(fm.R.error_estimate) << "\n"
           << "R*g0," << fm.product.to_string(g.digits) << "," << sci(fm.product_error) << "\n";
        break;
    }
    return kExitOk;
  }
  const BigReal diff = abs(BigReal(fm.phi) -= fm.phi_via_g0);
  switch (g.fmt()) {
    case Format::Text:
      os << fm.phi.to_string(g.digits) << "\n"
         << "via g(0): " << fm.phi_via_g0.to_string(g.digits) << "\n"
         << "difference: " << sci(diff) << "\n";
      break;
    case Format::Json:
      os << json{{"phi", fm.phi.to_string(g.digits)},
                 {"phi_via_g0", fm.phi_via_g0.to_string(g.digits)},
                 {"difference", sci(diff)}}
                .dump(2)
         << "\n";
      break;
    case Format::Csv:
      os << "phi,phi_via_g0,difference\n"
         << fm.phi.to_string(g.digits) << "," << fm.phi_via_g0.to_string(g.digits) << ","
         << sci(diff) << "\n";
      break;
  }
  return kExitOk;
}

// ---- probe / scan ----------------------------------------------------------

int cmd_probe(std::ostream& os, const Globals& g, const std::string& a_text,
              const std::string& b_text, int k, std::int64_t n_max, std::int64_t n_tail) {
  const auto rows = remainder_sign_probe(rational_arg(a_text, "--a"), rational_arg(b_text, "--b"),
                                         k, n_max, n_tail);
  const bool ok = std::all_of(rows.begin(), rows.end(),
                              [](const RemainderSign& r) { return r.sign == r.expected; });
  switch (g.fmt()) {
    case Format::Text:
      os << "n sign expected\n";
      for (const auto& r : rows) {
        os << r.n << " " << r.sign << " " << r.expected << (r.sign == r.expected ? "" : "  MISMATCH")
           << "\n";
      }
      os << (ok ? "all signs match (-1)^t_n\n" : "sign mismatch found\n");
      break;
    case Format::Json: {
      json arr = json::array();
      for (const auto& r : rows) arr.push_back({{"n", r.n}, {"sign", r.sign}, {"expected", r.expected}});
      os << json{{"rows", arr}, {"all_match", ok}}.dump(2) << "\n";
      break;
    }
    case Format::Csv:
      os << "n,sign,expected\n";
      for (const auto& r : rows) os << r.n << "," << r.sign << "," << r.expected << "\n";
      break;
  }
  return ok ? kExitOk : kExitMath;
}

int cmd_scan(std::ostream& os, const Globals& g, const std::string& lo, const std::string& hi,
             std::int64_t steps) {
  if (steps < 0) throw UsageError("--steps must be >= 0");
  const ScanReport report =
      monotonicity_scan(rational_arg(lo, "--lo"), rational_arg(hi, "--hi"), steps, g.options());
  const int shown = std::min(g.digits, 30);
  switch (g.fmt()) {
    case Format::Text:
      os << "x h(x) error_estimate\n";
      for (const auto& p : report.points) {
        os << to_string(p.x) << " " << p.h.value.to_string(shown) << " " << sci(p.h.error_estimate)
           << "\n";
      }
      os << (report.strictly_decreasing() ? "strictly decreasing beyond error estimates\n"
                                          : "decrease not established at some steps\n");
      break;
    case Format::Json: {
      json arr = json::array();
      for (const auto& p : report.points) {
        arr.push_back({{"x", to_string(p.x)},
                       {"h", p.h.value.to_string(g.digits)},
                       {"error_estimate", sci(p.h.error_estimate)}});
      }
      os << json{{"points", arr},
                 {"violations", report.violations},
                 {"strictly_decreasing", report.strictly_decreasing()}}
                .dump(2)
         << "\n";
      break;
    }
    case Format::Csv:
      os << "x,h,error_estimate\n";
      for (const auto& p : report.points) {
        os << to_string(p.x) << "," << p.h.value.to_string(g.digits) << ","
           << sci(p.h.error_estimate) << "\n";
      }
      break;
  }
  return report.strictly_decreasing() ? kExitOk : kExitMath;
}

// ---- reduce ----------------------------------------------------------------

int cmd_reduce(std::ostream& os, const Globals& g, const std::string& expr,
               const std::string& family_name, const std::string& a_text,
               const std::string& b_text, std::int64_t start, int depth, bool certificate) {
  GExpression target;
  std::optional<Rational> expected;
  if (!family_name.empty()) {
    if (!expr.empty()) throw UsageError("give either an expression or --family, not both");
    if (a_text.empty()) throw UsageError("--family needs --a");
    std::optional<Rational> b;
    if (!b_text.empty()) b = rational_arg(b_text, "--b");
    const Family f = family_from_string(family_name);
    const Rational a = rational_arg(a_text, "--a");
    target = expr_from_spec(family(f, a, b).spec);
    expected = family_value(f, a, b);
  } else if (expr.find("G(") != std::string::npos || expr.find("log(") != std::string::npos) {
    target = parse_gexpression(expr);
  } else if (!expr.empty()) {
    target = expr_from_spec(ProductSpec{parse_factored(expr), ExponentKind::PmThue, start});
  } else {
    throw UsageError("reduce needs an expression or --family");
  }
  const Reduction red = reduce(target, depth);
  switch (g.fmt()) {
    case Format::Text:
      if (red.reduced) {
        os << red.constant.render() << "\n";
        if (certificate) {
          for (const auto& [x, c] : red.certificate) {
            os << "lambda(" << to_string(x) << ") = " << to_string(c) << "\n";
          }
        }
      } else {
        os << "irreducible at depth " << red.depth << " (residual " << red.residual.render()
           << ")\n";
      }
      break;
    case Format::Json: {
      json j = to_json(red);
      j["expression"] = target.render();
      os << j.dump(2) << "\n";
      break;
    }
    case Format::Csv:
      os << "reduced,depth,constant\n"
         << (red.reduced ? "true" : "false") << "," << red.depth << ","
         << (red.reduced ? red.constant.render() : "") << "\n";
      break;
  }
  if (expected && red.reduced && red.constant != PowerProduct::from_rational(*expected)) {
    throw ConsistencyError("symbolic constant differs from the family's right-hand side");
  }
  return kExitOk;
}

// ---- catalog ---------------------------------------------------------------

int cmd_catalog(std::ostream& os, const Globals& g) {
  switch (g.fmt()) {
    case Format::Text:
      for (const Identity& id : catalog()) {
        os << id.name << "  " << to_string(id.spec.kind) << "  n>=" << id.spec.start << "  "
           << id.spec.rational.render() << " = " << id.closed_form.render() << "\n";
      }
      break;
    case Format::Json: {
      json arr = json::array();
      for (const Identity& id : catalog()) arr.push_back(to_json(id));
      os << arr.dump(2) << "\n";
      break;
    }
    case Format::Csv:
      os << "name,kind,start,rational,closed_form\n";
      for (const Identity& id : catalog()) {
        os << id.name << "," << to_string(id.spec.kind) << "," << id.spec.start << ",\""
           << id.spec.rational.render() << "\",\"" << id.closed_form.render() << "\"\n";
      }
      break;
  }
  return kExitOk;
}

int default_digits(std::ostream& err, bool& ok) {
  ok = true;
  const char* env = std::getenv("TMPROD_DIGITS");
  if (env == nullptr || *env == '\0') return 60;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 10 || v > 100000) {
    err << "error: TMPROD_DIGITS must be an integer >= 10\n";
    ok = false;
  }
  return static_cast<int>(v);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Globals g;
  bool env_ok = true;
  g.digits = default_digits(err, env_ok);
  if (!env_ok) return kExitUsage;

  CLI::App app{"Thue-Morse and Rudin-Shapiro infinite products", "tmprod"};
  app.require_subcommand(1);
  app.fallthrough();
  std::int64_t terms = 0;
  app.add_option("--digits", g.digits, "Significant digits (default 60, or $TMPROD_DIGITS)")
      ->check(CLI::Range(10, 100000));
  app.add_option("--split-levels", g.split_levels, "Dyadic splits for +-1 Thue-Morse products")
      ->check(CLI::NonNegativeNumber);
  auto* terms_opt =
      app.add_option("--terms", terms, "Summed terms (default 4096 Thue-Morse, 1000000 Rudin-Shapiro)")
          ->check(CLI::Range(std::int64_t{16}, std::int64_t{1} << 40));
  app.add_option("--rs-moments", g.rs_moments,
                 "Expansion orders removed before Rudin-Shapiro summation (0 = plain sum)")
      ->check(CLI::Range(0, 12));
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--output", g.output, "Write results to this file instead of stdout");

  // seq
  std::string seq_kind, seq_word;
  std::int64_t seq_count = 16;
  unsigned seq_base = 2;
  auto* seq = app.add_subcommand("seq", "Print the first values of an exponent sequence");
  seq->add_option("kind", seq_kind, "t, v, pm-t, pm-v or block")->required();
  seq->add_option("--count", seq_count, "Number of values");
  seq->add_option("--word", seq_word, "Block for `block` (digits in the given base)");
  seq->add_option("--base", seq_base, "Base for `block`")->check(CLI::Range(2u, 36u));

  // eval
  std::string eval_expr, eval_kind = "pm-t";
  std::int64_t eval_start = 0;
  auto* ev = app.add_subcommand("eval", "Evaluate prod R(n)^e(n) over n >= start");
  ev->add_option("rational", eval_expr, "Factor expression such as \"(2n+1)/(2n+2)\"")->required();
  ev->add_option("--kind", eval_kind, "pm-t, t, pm-v, v or plain");
  ev->add_option("--start", eval_start, "First index (0 or 1)");

  // verify
  std::vector<std::string> verify_names;
  bool verify_all_flag = false;
  std::string verify_family, verify_a, verify_b, verify_tol;
  auto* ver = app.add_subcommand("verify", "Check catalog identities numerically and symbolically");
  ver->add_option("names", verify_names, "Catalog names");
  ver->add_flag("--all", verify_all_flag, "Every catalog entry");
  ver->add_option("--family", verify_family, "Family i, ii, iii or iv");
  ver->add_option("--a", verify_a, "Family parameter a");
  ver->add_option("--b", verify_b, "Family parameter b (family i)");
  ver->add_option("--tolerance", verify_tol, "Absolute tolerance (default 10x error estimate)");

  // constants
  std::string const_name;
  auto* con = app.add_subcommand("constants", "g(0) and the Flajolet-Martin constants");
  con->add_option("name", const_name, "g0, fm-R or fm-phi")->required();

  // g
  std::string g_x;
  auto* gcmd = app.add_subcommand("g", "g(x) = f(x/2, (x+1)/2) / (x+1)");
  gcmd->add_option("--x", g_x, "Rational x >= 0")->required();

  // probe
  std::string probe_a = "2", probe_b = "1";
  int probe_k = 0;
  std::int64_t probe_nmax = 64, probe_tail = std::int64_t{1} << 20;
  auto* pro = app.add_subcommand("probe", "Signs of Thue-Morse remainders of T^k log((x+a)/(x+b))");
  pro->add_option("--a", probe_a, "a > b");
  pro->add_option("--b", probe_b, "b > 0");
  pro->add_option("--k", probe_k, "Applications of T")->check(CLI::Range(0, 16));
  pro->add_option("--n-max", probe_nmax, "Largest n reported")->check(CLI::NonNegativeNumber);
  pro->add_option("--n-tail", probe_tail, "Truncation index")->check(CLI::PositiveNumber);

  // scan
  std::string scan_lo = "0", scan_hi = "10";
  std::int64_t scan_steps = 40;
  auto* scan = app.add_subcommand("scan", "Monotonicity of h(x) = f(x/2, (x+1)/2)");
  scan->add_option("--lo", scan_lo, "Left end (>= 0)");
  scan->add_option("--hi", scan_hi, "Right end");
  scan->add_option("--steps", scan_steps, "Grid intervals");

  // reduce
  std::string red_expr, red_family, red_a, red_b;
  std::int64_t red_start = 1;
  int red_depth = kDefaultReduceDepth;
  bool red_cert = false;
  auto* red = app.add_subcommand("reduce", "Exact constant of a G-expression or +-1 Thue-Morse product");
  red->add_option("expression", red_expr, "\"2G(1)\", \"G(1/2)-G(1)\" or a factor expression");
  red->add_option("--start", red_start, "First index when a factor expression is given");
  red->add_option("--family", red_family, "Family i, ii, iii or iv");
  red->add_option("--a", red_a, "Family parameter a");
  red->add_option("--b", red_b, "Family parameter b (family i)");
  red->add_option("--depth", red_depth, "Search depth")->check(CLI::Range(0, 12));
  red->add_flag("--certificate", red_cert, "Print the lambda certificate");

  auto* cat = app.add_subcommand("catalog", "List the identity catalog");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  if (terms_opt->count() > 0) g.terms = terms;

  std::ofstream file;
  std::ostringstream buffer;
  std::ostream& os = g.output.empty() ? out : static_cast<std::ostream&>(buffer);
  int code = kExitOk;
  try {
    if (seq->parsed()) {
      code = cmd_seq(os, g, seq_kind, seq_count, seq_word, seq_base);
    } else if (ev->parsed()) {
      const ExponentKind kind = kind_arg(eval_kind);
      const ProductSpec spec{parse_factored(eval_expr), kind, eval_start};
      print_eval(os, evaluate(spec, g.options()), g);
    } else if (ver->parsed()) {
      code = cmd_verify(os, g, verify_names, verify_all_flag, verify_family, verify_a, verify_b,
                        verify_tol);
    } else if (con->parsed()) {
      code = cmd_constants(os, g, const_name);
    } else if (gcmd->parsed()) {
      print_eval(os, g_value(rational_arg(g_x, "--x"), g.options()), g);
    } else if (pro->parsed()) {
      code = cmd_probe(os, g, probe_a, probe_b, probe_k, probe_nmax, probe_tail);
    } else if (scan->parsed()) {
      code = cmd_scan(os, g, scan_lo, scan_hi, scan_steps);
    } else if (red->parsed()) {
      code = cmd_reduce(os, g, red_expr, red_family, red_a, red_b, red_start, red_depth, red_cert);
    } else if (cat->parsed()) {
      code = cmd_catalog(os, g);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    code = kExitMath;
  }

  if (!g.output.empty()) {
    file.open(g.output);
    if (!file) {
      err << "error: cannot write " << g.output << "\n";
      return kExitUsage;
    }
    file << buffer.str();
  }
  return code;
}

}  // namespace tmprod::cli
