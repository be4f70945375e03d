#include "hcrit/certify/certificate.hpp"

#include <stdexcept>

namespace hcrit {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Violation: return "violation";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

Verdict parse_verdict(const std::string& s) {
  if (s == "pass") return Verdict::Pass;
  if (s == "violation") return Verdict::Violation;
  if (s == "inconclusive") return Verdict::Inconclusive;
  throw std::invalid_argument("unknown verdict '" + s + "'");
}

Verdict classify(const RBound& slack) {
  if (slack.sign_lo() >= 0) return Verdict::Pass;
  if (slack.sign_hi() < 0) return Verdict::Violation;
  return Verdict::Inconclusive;
}

Certificate Certificate::inequality(std::string statement, std::string anchor, Json inputs, const RBound& lhs,
                                    const RBound& rhs, long prec) {
  Certificate c;
  c.statement = std::move(statement);
  c.anchor = std::move(anchor);
  c.inputs = std::move(inputs);
  c.lhs = lhs;
  c.rhs = rhs;
  c.slack = lhs - rhs;
  c.verdict = classify(c.slack);
  c.prec = prec;
  return c;
}

Certificate Certificate::identity(std::string statement, std::string anchor, Json inputs, const RBound& lhs,
                                  const RBound& rhs, long prec) {
  Certificate c;
  c.statement = std::move(statement);
  c.anchor = std::move(anchor);
  c.inputs = std::move(inputs);
  c.lhs = lhs;
  c.rhs = rhs;
  RBound diff = lhs - rhs;
  // 0 in [lo, hi] iff min(hi, -lo) >= 0
  RBound s = min(RBound(diff.hi(), diff.hi()), -RBound(diff.lo(), diff.lo()));
  c.slack = RBound(s.lo(), s.lo());
  c.verdict = c.slack.sign_lo() >= 0 ? Verdict::Pass : Verdict::Violation;
  c.prec = prec;
  return c;
}

Certificate Certificate::vacuous_pass(std::string statement, std::string anchor, Json inputs, std::string reason,
                                      long prec) {
  Certificate c;
  c.statement = std::move(statement);
  c.anchor = std::move(anchor);
  c.inputs = std::move(inputs);
  c.inputs["precondition"] = std::move(reason);
  c.verdict = Verdict::Pass;
  c.vacuous = true;
  c.prec = prec;
  return c;
}

Json rbound_to_json(const RBound& b) {
  auto enc = [](const BigFloat& x) {
    auto [m, e] = x.mantissa_exponent();
    return Json{{"mantissa", m.get_str()}, {"exponent", e}};
  };
  return Json::array({enc(b.lo()), enc(b.hi())});
}

RBound rbound_from_json(const Json& j) {
  auto dec = [](const Json& x) {
    return BigFloat::from_mantissa_exponent(Integer(x.at("mantissa").get<std::string>()), x.at("exponent").get<long>());
  };
  return RBound(dec(j.at(0)), dec(j.at(1)));
}

Json Certificate::to_json() const {
  Json j;
  j["statement"] = statement;
  j["anchor"] = anchor;
  j["inputs"] = inputs;
  j["lhs"] = rbound_to_json(lhs);
  j["rhs"] = rbound_to_json(rhs);
  j["slack"] = rbound_to_json(slack);
  j["verdict"] = to_string(verdict);
  j["witness"] = witness;
  j["prec"] = prec;
  j["vacuous"] = vacuous;
  return j;
}

Certificate Certificate::from_json(const Json& j) {
  Certificate c;
  c.statement = j.at("statement").get<std::string>();
  c.anchor = j.at("anchor").get<std::string>();
  c.inputs = j.at("inputs");
  c.lhs = rbound_from_json(j.at("lhs"));
  c.rhs = rbound_from_json(j.at("rhs"));
  c.slack = rbound_from_json(j.at("slack"));
  c.verdict = parse_verdict(j.at("verdict").get<std::string>());
  c.witness = j.at("witness");
  c.prec = j.at("prec").get<long>();
  c.vacuous = j.value("vacuous", false);
  return c;
}

}  // namespace hcrit
