#include "g235/report.hpp"

#include <sstream>

namespace g235 {

CheckResult counted_check(const std::string& name, bool pass, int count,
                          const std::string& witness) {
  CheckResult c;
  c.name = name + " [" + std::to_string(count) + "]";
  c.pass = pass;
  c.witness = witness;
  return c;
}

Json Report::to_json() const {
  Json j;
  j["command"] = command;
  j["params"] = params;
  Json cl = Json::array();
  for (const auto& c : checks) {
    Json e;
    e["name"] = c.name;
    e["pass"] = c.pass;
    if (!c.witness.empty()) e["witness"] = c.witness;
    cl.push_back(e);
  }
  j["checks"] = cl;
  if (!derived.empty()) j["derived"] = derived;
  j["ok"] = ok();
  j["timing_ms"] = timing_ms;
  return j;
}

std::string Report::to_text() const {
  std::ostringstream os;
  os << "== " << command << " ==\n";
  if (!params.empty()) os << "params: " << params.dump() << "\n";
  for (const auto& c : checks) {
    os << "  [" << (c.pass ? "PASS" : "FAIL") << "] " << c.name;
    if (!c.witness.empty()) os << "  (" << c.witness << ")";
    os << "\n";
  }
  if (!derived.empty()) os << "derived: " << derived.dump(2) << "\n";
  os << (ok() ? "OK" : "FAILED") << "\n";
  return os.str();
}

} // namespace g235
