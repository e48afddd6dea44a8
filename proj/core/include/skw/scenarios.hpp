#pragma once

#include <map>
#include <string>
#include <vector>

#include "skw/report.hpp"
#include "skw/session.hpp"

namespace skw {

struct ScenarioContext {
  const Session& session;
  /// Points declared in the config; others are derived with auto_point.
  std::map<std::string, Point> points;

  Point point(const std::string& name) const;
};

/// Every runnable scenario id, in report order ("all" excluded).
const std::vector<std::string>& scenario_ids();

/// Never throws for module errors: they become failed checks.
/// Throws Error(ValidationError) for an unknown id.
Report run_scenario(const std::string& id, const ScenarioContext& ctx);

/// Runs ids ("all" expands) on up to `threads` workers; output order is
/// the order of ids regardless of scheduling.
std::vector<Report> run_scenarios(const std::vector<std::string>& ids, const ScenarioContext& ctx, int threads = 1);

/// Power-series coefficients of num / prod(dens), first `terms` terms.
std::vector<long long> series_coeffs(const std::vector<long long>& num, const std::vector<std::vector<long long>>& dens,
                                     int terms);

}  // namespace skw
