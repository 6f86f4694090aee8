#pragma once

#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

namespace orlicz {

// Outcome of one family of checks. A case is vacuous when the inequality has
// an infinite side and so asserts nothing; vacuous cases are not failures.
struct CheckRecord {
  CheckRecord() = default;
  CheckRecord(std::string suite_id, std::string check_id, std::string anchor_text)
      : suite(std::move(suite_id)), check(std::move(check_id)), anchor(std::move(anchor_text)) {}

  std::string suite;
  std::string check;
  std::string anchor;
  int cases = 0;
  int failures = 0;
  int vacuous = 0;
  std::vector<double> constants;                    // measured, never asserted
  std::vector<std::pair<double, double>> intervals; // certified enclosures
  std::vector<std::string> notes;                   // first few failure details

  void record(bool ok, const std::string& detail = {});
  void record_vacuous() {
    ++cases;
    ++vacuous;
  }
  bool passed() const { return failures == 0; }
  nlohmann::json to_json() const;
};

struct Report {
  std::vector<CheckRecord> records;

  bool passed() const;
  void append(Report other);
  nlohmann::json to_json() const;
  // One row per measured constant: suite,check,index,value.
  std::string constants_csv() const;
};

}  // namespace orlicz
