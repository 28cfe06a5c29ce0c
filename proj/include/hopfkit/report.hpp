#pragma once

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace hopfkit {

using Json = nlohmann::ordered_json;

/// Outcome of one checked statement. Serializes with a fixed key order so
/// identical inputs give byte-identical output.
struct CheckReport {
  std::string statement;
  bool passed = true;
  std::vector<std::string> witnesses;
  std::vector<std::string> warnings;
  Json details = Json::object();

  CheckReport() = default;
  explicit CheckReport(std::string s) : statement(std::move(s)) {}

  void fail(std::string witness) {
    passed = false;
    witnesses.push_back(std::move(witness));
  }
  void warn(std::string w) { warnings.push_back(std::move(w)); }

  Json to_json() const {
    Json j;
    j["statement"] = statement;
    j["status"] = passed ? "pass" : "fail";
    j["witnesses"] = witnesses;
    if (!warnings.empty()) j["warnings"] = warnings;
    if (!details.empty()) j["details"] = details;
    return j;
  }

  std::string to_text() const {
    std::string out = std::string(passed ? "[PASS] " : "[FAIL] ") + statement + "\n";
    for (const auto& [key, value] : details.items())
      out += "    " + key + ": " + (value.is_string() ? value.get<std::string>() : value.dump()) + "\n";
    for (const auto& w : witnesses) out += "    witness: " + w + "\n";
    for (const auto& w : warnings) out += "    warning: " + w + "\n";
    return out;
  }
};

}  // namespace hopfkit
