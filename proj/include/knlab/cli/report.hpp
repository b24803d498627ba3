#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace knlab::cli {

using Json = nlohmann::ordered_json;

struct Check {
  std::string name;
  std::string paper_ref;
  bool passed = false;
  Json value;
  Json expected;
  double tolerance = 0;  // 0 for exact comparisons

  Json to_json() const {
    Json j;
    j["name"] = name;
    j["paper_ref"] = paper_ref;
    j["status"] = passed ? "pass" : "fail";
    j["value"] = value;
    j["expected"] = expected;
    j["tolerance"] = tolerance;
    return j;
  }

  static Check from_json(const Json& j) {
    return {j.at("name").get<std::string>(), j.at("paper_ref").get<std::string>(),
            j.at("status").get<std::string>() == "pass", j.at("value"), j.at("expected"),
            j.at("tolerance").get<double>()};
  }
};

class Report {
 public:
  explicit Report(Json params = Json::object()) : params_(std::move(params)) {}

  Json& params() { return params_; }
  const Json& params() const { return params_; }
  const std::vector<Check>& checks() const { return checks_; }

  void add(Check c) { checks_.push_back(std::move(c)); }

  // Exact comparison of value against expected.
  void expect(std::string name, std::string ref, Json value, Json expected) {
    const bool ok = value == expected;
    add({std::move(name), std::move(ref), ok, std::move(value), std::move(expected), 0});
  }

  // value < bound (or value > bound when `above` is set).
  void bound(std::string name, std::string ref, double value, double limit, bool above = false) {
    const bool ok = above ? value > limit : value < limit;
    add({std::move(name), std::move(ref), ok, value, Json{{above ? ">" : "<", limit}}, limit});
  }

  // A condition without a natural numeric value.
  void require(std::string name, std::string ref, bool ok, Json value = true) {
    add({std::move(name), std::move(ref), ok, std::move(value), true, 0});
  }

  void fail(std::string name, std::string ref, const std::string& message) {
    add({std::move(name), std::move(ref), false, message, nullptr, 0});
  }

  bool passed() const {
    for (const auto& c : checks_)
      if (!c.passed) return false;
    return true;
  }

  const Check* first_failure() const {
    for (const auto& c : checks_)
      if (!c.passed) return &c;
    return nullptr;
  }

  Json to_json() const {
    Json j;
    j["params"] = params_;
    j["checks"] = Json::array();
    for (const auto& c : checks_) j["checks"].push_back(c.to_json());
    j["passed"] = passed();
    return j;
  }

  static Report from_json(const Json& j) {
    Report r(j.at("params"));
    for (const auto& c : j.at("checks")) r.add(Check::from_json(c));
    return r;
  }

  void write_text(std::ostream& out) const {
    for (const auto& c : checks_) {
      out << (c.passed ? "[PASS] " : "[FAIL] ") << c.name << ": " << c.value.dump();
      if (!c.passed) out << " (expected " << c.expected.dump() << ")";
      out << "  <" << c.paper_ref << ">\n";
    }
    std::size_t failed = 0;
    for (const auto& c : checks_) failed += c.passed ? 0 : 1;
    out << (failed == 0 ? "PASSED" : "FAILED") << ": " << checks_.size() - failed << "/" << checks_.size()
        << " checks\n";
  }

 private:
  Json params_;
  std::vector<Check> checks_;
};

}  // namespace knlab::cli
