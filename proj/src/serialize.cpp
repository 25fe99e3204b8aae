#include "tmprod/serialize.hpp"

#include "tmprod/errors.hpp"

namespace tmprod {

using nlohmann::json;

namespace {

Rational rational_field(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_string()) {
    throw InputError(std::string("closed form: missing string field '") + key + "'");
  }
  Rational q;
  if (!parse_rational(j.at(key).get<std::string>(), q)) {
    throw InputError(std::string("closed form: bad rational in '") + key + "'");
  }
  return q;
}

}  // namespace

json to_json(const EvalResult& r, int digits) {
  return json{{"value", r.value.to_string(digits)},
              {"error_estimate", r.error_estimate.to_string(3)},
              {"terms_used", r.terms_used},
              {"split_levels", r.split_levels}};
}

json to_json(const ClosedForm& cf) {
  const ClosedForm::Node& n = cf.node();
  switch (n.kind) {
    case ClosedForm::Node::Kind::Rational:
      return json{{"type", "rational"}, {"value", to_string(n.value)}};
    case ClosedForm::Node::Kind::Constant:
      return json{{"type", "constant"}, {"name", std::string(to_string(n.leaf))}};
    case ClosedForm::Node::Kind::Binary:
      return json{{"type", "binary"},
                  {"op", std::string(to_string(n.op))},
                  {"lhs", to_json(cf.lhs())},
                  {"rhs", to_json(cf.rhs())}};
    case ClosedForm::Node::Kind::Power:
      return json{{"type", "pow"}, {"base", to_json(cf.lhs())}, {"exponent", to_string(n.value)}};
  }
  return json{};
}

ClosedForm closed_form_from_json(const json& j) {
  if (!j.is_object() || !j.contains("type")) throw InputError("closed form: expected an object");
  const std::string type = j.at("type").get<std::string>();
  if (type == "rational") return ClosedForm::rational(rational_field(j, "value"));
  if (type == "constant") {
    const std::string name = j.at("name").get<std::string>();
    for (auto leaf : {ClosedForm::Leaf::Pi, ClosedForm::Leaf::GammaQuarter,
                      ClosedForm::Leaf::ExpEulerGamma}) {
      if (to_string(leaf) == name) return ClosedForm::constant(leaf);
    }
    throw InputError("closed form: unknown constant '" + name + "'");
  }
  if (type == "pow") return closed_form_from_json(j.at("base")).pow(rational_field(j, "exponent"));
  if (type == "binary") {
    const ClosedForm lhs = closed_form_from_json(j.at("lhs"));
    const ClosedForm rhs = closed_form_from_json(j.at("rhs"));
    const std::string op = j.at("op").get<std::string>();
    if (op == "+") return lhs + rhs;
    if (op == "-") return lhs - rhs;
    if (op == "*") return lhs * rhs;
    if (op == "/") return lhs / rhs;
    throw InputError("closed form: unknown operator '" + op + "'");
  }
  throw InputError("closed form: unknown node type '" + type + "'");
}

json to_json(const Identity& id) {
  return json{{"name", id.name},
              {"rational", id.spec.rational.render()},
              {"kind", std::string(to_string(id.spec.kind))},
              {"start", id.spec.start},
              {"closed_form", to_json(id.closed_form)},
              {"provenance", id.provenance}};
}

Identity identity_from_json(const json& j) {
  Identity id;
  id.name = j.at("name").get<std::string>();
  id.spec.rational = parse_factored(j.at("rational").get<std::string>());
  const auto kind = exponent_kind_from_string(j.at("kind").get<std::string>());
  if (!kind) throw InputError("identity: unknown kind");
  id.spec.kind = *kind;
  id.spec.start = checked_start(j.at("start").get<std::int64_t>());
  id.closed_form = closed_form_from_json(j.at("closed_form"));
  id.provenance = j.value("provenance", "");
  return id;
}

json to_json(const VerifyReport& r, int digits) {
  json j{{"name", r.name},
         {"computed", r.computed.to_string(digits)},
         {"expected", r.expected.to_string(digits)},
         {"abs_error", r.abs_error.to_string(3)},
         {"error_estimate", r.error_estimate.to_string(3)},
         {"tolerance", r.tolerance.to_string(3)},
         {"pass", r.pass}};
  if (!r.failure.empty()) j["failure"] = r.failure;
  if (r.symbolic) {
    j["symbolic"] = json{{"reduced", r.symbolic->reduced},
                         {"depth", r.symbolic->depth},
                         {"constant", r.symbolic->constant},
                         {"comparable", r.symbolic->comparable},
                         {"matches", r.symbolic->matches}};
  }
  return j;
}

json to_json(const Reduction& r) {
  json j{{"reduced", r.reduced}, {"depth", r.depth}};
  if (r.reduced) {
    j["constant"] = r.constant.render();
    json cert = json::object();
    for (const auto& [x, c] : r.certificate) cert[to_string(x)] = to_string(c);
    j["certificate"] = cert;
  } else {
    j["residual"] = r.residual.render();
  }
  return j;
}

}  // namespace tmprod
