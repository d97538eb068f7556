#include "godeaux/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#ifndef GODEAUX_VERSION
#define GODEAUX_VERSION "0.0.0"
#endif

namespace godeaux {

void VerificationReport::add(Check check) {
  if (check.id.empty()) throw std::invalid_argument("check id must not be empty");
  auto dup = std::find_if(checks_.begin(), checks_.end(), [&](const Check& c) { return c.id == check.id; });
  if (dup != checks_.end()) throw std::invalid_argument("duplicate check id '" + check.id + "'");
  checks_.push_back(std::move(check));
}

void VerificationReport::add(std::string id, std::string description, std::string paper_ref, std::string expected,
                             std::string actual) {
  add(Check{std::move(id), std::move(description), std::move(paper_ref), std::move(expected), std::move(actual)});
}

void VerificationReport::set_config(std::string key, std::string value) {
  for (auto& [k, v] : config_)
    if (k == key) {
      v = std::move(value);
      return;
    }
  config_.emplace_back(std::move(key), std::move(value));
}

std::size_t VerificationReport::failures() const {
  return static_cast<std::size_t>(std::count_if(checks_.begin(), checks_.end(), [](const Check& c) { return !c.passed(); }));
}

void VerificationReport::merge(const VerificationReport& other) {
  for (Check c : other.checks_) {
    c.id = other.scenario_ + "/" + c.id;
    add(std::move(c));
  }
  for (const auto& n : other.notes_) notes_.push_back(other.scenario_ + ": " + n);
}

std::string version() { return GODEAUX_VERSION; }

std::string to_json(const VerificationReport& report) {
  using nlohmann::ordered_json;
  ordered_json out;
  out["scenario"] = report.scenario();
  ordered_json config = ordered_json::object();
  for (const auto& [k, v] : report.config()) config[k] = v;
  out["config"] = config;
  ordered_json checks = ordered_json::array();
  for (const auto& c : report.checks()) {
    ordered_json j;
    j["id"] = c.id;
    j["description"] = c.description;
    j["paper_ref"] = c.paper_ref;
    j["status"] = c.passed() ? "pass" : "fail";
    j["expected"] = c.expected;
    j["actual"] = c.actual;
    checks.push_back(std::move(j));
  }
  out["checks"] = std::move(checks);
  out["notes"] = report.notes();
  out["timing_ms"] = report.timing_ms ? ordered_json(*report.timing_ms) : ordered_json(nullptr);
  out["version"] = version();
  return out.dump(2) + "\n";
}

std::string to_table(const VerificationReport& report) {
  std::size_t id_width = 2;
  for (const auto& c : report.checks()) id_width = std::max(id_width, c.id.size());
  std::ostringstream out;
  out << "scenario " << report.scenario() << "\n";
  for (const auto& [k, v] : report.config()) out << "  " << k << " = " << v << "\n";
  for (const auto& c : report.checks()) {
    out << (c.passed() ? "PASS " : "FAIL ") << std::left << std::setw(static_cast<int>(id_width)) << c.id
        << "  expected " << c.expected;
    if (!c.passed()) out << "  actual " << c.actual;
    out << "\n";
  }
  for (const auto& n : report.notes()) out << "note: " << n << "\n";
  out << report.checks().size() - report.failures() << "/" << report.checks().size() << " checks passed";
  if (report.timing_ms) out << " in " << std::fixed << std::setprecision(1) << *report.timing_ms << " ms";
  out << "\n";
  return out.str();
}

}  // namespace godeaux
