// Verification reports: per-case left/right values with an overall
// verdict, serializable to JSON and back without loss.
//
// verdict is one of:
//   "verified"       — every case compared equal and the check asserts;
//   "counterexample" — at least one asserted case differs (full
//                      reproduction data is kept in the cases/witnesses);
//   "inconclusive"   — the computation ran outside its proven regime (or
//                      explores an open question); values are reported
//                      without assertion.
//
// All numeric values are serialized as decimal strings so arbitrary-size
// integers survive the round trip.  The `ms` timing field defaults to 0
// and is only populated on request, keeping identical inputs byte-identical
// by default.
#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace orbidual {

struct VerificationCase {
  std::string params;
  std::string lhs;
  std::string rhs;
  bool equal = false;
};

struct VerificationReport {
  std::string instance;
  std::vector<VerificationCase> cases;
  std::string verdict;
  std::vector<std::string> witnesses;
  long long ms = 0;

  bool all_equal() const;
  void add_case(std::string params, std::string lhs, std::string rhs);

  nlohmann::json to_json() const;
  static VerificationReport from_json(const nlohmann::json& j);
  // Human-readable fixed-width rendering.
  std::string to_table() const;
};

}  // namespace orbidual
