#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "g235/models.hpp"

namespace g235 {

using Json = nlohmann::ordered_json;

/// Deterministic command report: echoed command, checks, derived values.
struct Report {
  std::string command;
  Json params = Json::object();
  std::vector<CheckResult> checks;
  Json derived = Json::object();
  double timing_ms = 0.0;

  bool ok() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  void add(const CheckResult& c) { checks.push_back(c); }
  void add_all(const std::vector<CheckResult>& cs) {
    checks.insert(checks.end(), cs.begin(), cs.end());
  }
  Json to_json() const;
  /// Human-readable table.
  std::string to_text() const;
};

/// Count-carrying check helper.
CheckResult counted_check(const std::string& name, bool pass, int count,
                          const std::string& witness = "");

} // namespace g235
