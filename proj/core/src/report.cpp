#include "skw/report.hpp"

#include <sstream>

namespace skw {

namespace {

// Fields must not break the record layout.
std::string clean(std::string s) {
  for (char& ch : s) {
    if (ch == '\t' || ch == '\n' || ch == '\r') ch = ' ';
  }
  return s;
}

}  // namespace

bool Report::passed() const {
  for (const auto& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

void Report::add(std::string id, std::string expected, std::string observed, std::string margin) {
  bool ok = expected == observed;
  checks.push_back({std::move(id), std::move(expected), std::move(observed), ok, std::move(margin)});
}

void Report::add_bool(std::string id, bool ok, std::string margin) {
  checks.push_back({std::move(id), "true", ok ? "true" : "false", ok, std::move(margin)});
}

std::string format_records(const std::vector<Report>& reports) {
  std::ostringstream out;
  for (const auto& r : reports) {
    for (const auto& c : r.checks) {
      out << clean(r.scenario) << '\t' << clean(c.id) << '\t' << clean(c.expected) << '\t' << clean(c.observed) << '\t'
          << (c.pass ? "pass" : "FAIL") << '\t' << clean(c.margin) << '\n';
    }
  }
  return out.str();
}

std::string format_human(const std::vector<Report>& reports) {
  std::ostringstream out;
  for (const auto& r : reports) {
    std::size_t good = 0;
    for (const auto& c : r.checks) good += c.pass ? 1 : 0;
    out << "== " << r.scenario << ": " << (r.passed() ? "PASS" : "FAIL") << " (" << good << "/" << r.checks.size()
        << ")\n";
    for (const auto& n : r.notes) out << "   # " << n << '\n';
    for (const auto& c : r.checks) {
      out << "   [" << (c.pass ? " ok " : "FAIL") << "] " << c.id;
      if (c.margin != "-") out << "  {" << c.margin << "}";
      out << '\n';
      if (!c.pass || c.expected != "true") out << "          expected " << c.expected << ", observed " << c.observed << '\n';
    }
  }
  return out.str();
}

std::string join(const std::vector<std::size_t>& xs, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + std::to_string(xs[i]);
  return out;
}

}  // namespace skw
