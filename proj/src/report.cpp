#include "orbidual/report.hpp"

#include <sstream>

namespace orbidual {

bool VerificationReport::all_equal() const {
  for (const VerificationCase& c : cases)
    if (!c.equal) return false;
  return true;
}

void VerificationReport::add_case(std::string params, std::string lhs, std::string rhs) {
  bool eq = lhs == rhs;
  cases.push_back(VerificationCase{std::move(params), std::move(lhs), std::move(rhs), eq});
}

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json jcases = nlohmann::json::array();
  for (const VerificationCase& c : cases)
    jcases.push_back({{"params", c.params}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"equal", c.equal}});
  return nlohmann::json{{"instance", instance},
                        {"cases", jcases},
                        {"verdict", verdict},
                        {"witnesses", witnesses},
                        {"ms", ms}};
}

VerificationReport VerificationReport::from_json(const nlohmann::json& j) {
  VerificationReport r;
  r.instance = j.at("instance").get<std::string>();
  for (const auto& c : j.at("cases")) {
    VerificationCase vc;
    vc.params = c.at("params").get<std::string>();
    vc.lhs = c.at("lhs").get<std::string>();
    vc.rhs = c.at("rhs").get<std::string>();
    vc.equal = c.at("equal").get<bool>();
    r.cases.push_back(std::move(vc));
  }
  r.verdict = j.at("verdict").get<std::string>();
  r.witnesses = j.at("witnesses").get<std::vector<std::string>>();
  r.ms = j.at("ms").get<long long>();
  return r;
}

std::string VerificationReport::to_table() const {
  std::ostringstream os;
  os << "instance: " << instance << "\n";
  os << "verdict:  " << verdict << "\n";
  for (const VerificationCase& c : cases)
    os << "  [" << (c.equal ? "ok" : "NE") << "] " << c.params << ": lhs=" << c.lhs
       << " rhs=" << c.rhs << "\n";
  for (const std::string& w : witnesses) os << "  note: " << w << "\n";
  return os.str();
}

}  // namespace orbidual
