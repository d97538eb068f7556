#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace godeaux {

// One named check. It passes iff expected and actual are the same string.
struct Check {
  std::string id;
  std::string description;
  std::string paper_ref;
  std::string expected;
  std::string actual;

  bool passed() const { return expected == actual; }
};

class VerificationReport {
 public:
  explicit VerificationReport(std::string scenario) : scenario_(std::move(scenario)) {}

  const std::string& scenario() const { return scenario_; }

  // Throws std::invalid_argument on a duplicate id.
  void add(Check check);
  void add(std::string id, std::string description, std::string paper_ref, std::string expected,
           std::string actual);
  void note(std::string text) { notes_.push_back(std::move(text)); }
  void set_config(std::string key, std::string value);

  const std::vector<Check>& checks() const { return checks_; }
  const std::vector<std::string>& notes() const { return notes_; }
  const std::vector<std::pair<std::string, std::string>>& config() const { return config_; }

  std::size_t failures() const;
  bool all_passed() const { return !checks_.empty() && failures() == 0; }

  std::optional<double> timing_ms;

  // Appends the checks of `other` with ids prefixed by "<scenario>/".
  void merge(const VerificationReport& other);

 private:
  std::string scenario_;
  std::vector<Check> checks_;
  std::vector<std::string> notes_;
  std::vector<std::pair<std::string, std::string>> config_;
};

std::string version();

// Keys in a fixed order; timing_ms is null unless set, so reruns are byte-identical.
std::string to_json(const VerificationReport& report);
// Fixed-width, one check per line, then a summary line.
std::string to_table(const VerificationReport& report);

}  // namespace godeaux
