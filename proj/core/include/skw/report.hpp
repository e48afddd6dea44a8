#pragma once

#include <string>
#include <vector>

namespace skw {

struct CheckResult {
  std::string id;
  std::string expected;
  std::string observed;
  bool pass = false;
  /// Certification margin, e.g. "n<=12"; "-" when the check is not windowed.
  std::string margin = "-";
};

struct Report {
  std::string scenario;
  std::vector<CheckResult> checks;
  /// Free-form lines printed in human output only.
  std::vector<std::string> notes;

  bool passed() const;
  void add(std::string id, std::string expected, std::string observed, std::string margin = "-");
  void add_bool(std::string id, bool ok, std::string margin = "-");
};

/// scenario, check_id, expected, observed, status, margin; tab-separated.
std::string format_records(const std::vector<Report>& reports);
std::string format_human(const std::vector<Report>& reports);

std::string join(const std::vector<std::size_t>& xs, const std::string& sep = ",");

}  // namespace skw
