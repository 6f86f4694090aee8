#include "orlicz/report.hpp"

#include <cmath>
#include <sstream>

namespace orlicz {

namespace {

constexpr std::size_t kMaxNotes = 5;

nlohmann::json number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return x;
}

}  // namespace

void CheckRecord::record(bool ok, const std::string& detail) {
  ++cases;
  if (ok) return;
  ++failures;
  if (!detail.empty() && notes.size() < kMaxNotes) notes.push_back(detail);
}

nlohmann::json CheckRecord::to_json() const {
  nlohmann::json consts = nlohmann::json::array();
  for (double c : constants) consts.push_back(number(c));
  nlohmann::json ivs = nlohmann::json::array();
  for (const auto& [lo, hi] : intervals) ivs.push_back({number(lo), number(hi)});
  nlohmann::json out;
  out["suite"] = suite;
  out["check"] = check;
  out["anchor"] = anchor;
  out["cases"] = cases;
  out["failures"] = failures;
  out["vacuous"] = vacuous;
  out["constants"] = consts;
  out["intervals"] = ivs;
  if (!notes.empty()) out["notes"] = notes;
  return out;
}

bool Report::passed() const {
  for (const CheckRecord& r : records) {
    if (!r.passed()) return false;
  }
  return true;
}

void Report::append(Report other) {
  for (CheckRecord& r : other.records) records.push_back(std::move(r));
}

nlohmann::json Report::to_json() const {
  nlohmann::json recs = nlohmann::json::array();
  int failures = 0;
  for (const CheckRecord& r : records) {
    recs.push_back(r.to_json());
    failures += r.failures;
  }
  nlohmann::json out;
  out["verdict"] = passed() ? "pass" : "fail";
  out["failures"] = failures;
  out["records"] = recs;
  return out;
}

std::string Report::constants_csv() const {
  std::ostringstream os;
  os.precision(17);
  os << "suite,check,index,value\n";
  for (const CheckRecord& r : records) {
    for (std::size_t i = 0; i < r.constants.size(); ++i) {
      os << r.suite << ',' << r.check << ',' << i << ',' << r.constants[i] << '\n';
    }
  }
  return os.str();
}

}  // namespace orlicz
