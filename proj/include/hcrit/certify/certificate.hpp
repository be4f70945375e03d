#pragma once

#include <json.hpp>
#include <string>

#include "hcrit/exactnum/rbound.hpp"

namespace hcrit {

using Json = nlohmann::ordered_json;

enum class Verdict { Pass, Violation, Inconclusive };

std::string to_string(Verdict v);
Verdict parse_verdict(const std::string& s);

/// Outcome of checking one inequality lhs >= rhs (or one identity) at one
/// input. `pass` is only ever claimed from a rigorous lower bound.
struct Certificate {
  std::string statement;
  std::string anchor;
  Json inputs = Json::object();
  RBound lhs, rhs, slack;
  Verdict verdict = Verdict::Inconclusive;
  Json witness;  // null when absent
  long prec = 0;
  /// The precondition of the statement failed, so it holds trivially.
  bool vacuous = false;

  bool pass() const { return verdict == Verdict::Pass; }

  /// lhs >= rhs; slack = lhs - rhs.
  static Certificate inequality(std::string statement, std::string anchor, Json inputs, const RBound& lhs,
                                const RBound& rhs, long prec);
  /// lhs = rhs, checked as overlap of the enclosures; slack is the amount by
  /// which 0 sits inside lhs - rhs (negative when the enclosures are disjoint).
  static Certificate identity(std::string statement, std::string anchor, Json inputs, const RBound& lhs,
                              const RBound& rhs, long prec);
  static Certificate vacuous_pass(std::string statement, std::string anchor, Json inputs, std::string reason,
                                  long prec);

  Json to_json() const;
  static Certificate from_json(const Json& j);
};

/// Verdict for a slack enclosure: pass if lo >= 0, violation if hi < 0.
Verdict classify(const RBound& slack);

Json rbound_to_json(const RBound& b);
RBound rbound_from_json(const Json& j);

}  // namespace hcrit
