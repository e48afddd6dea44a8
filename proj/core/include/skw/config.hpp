#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "skw/curve.hpp"
#include "skw/session.hpp"

namespace skw {

/// `point.NAME = auto` or `point.NAME = x,y,z`.
struct PointSpec {
  std::optional<std::array<std::int64_t, 3>> coords;

  friend bool operator==(const PointSpec&, const PointSpec&) = default;
};

struct SessionConfig {
  SessionParams params;
  std::map<std::string, PointSpec> points;

  friend bool operator==(const SessionConfig&, const SessionConfig&) = default;
};

/// One `key = value` per line, `#` starts a comment. Throws ParseError for
/// malformed lines and Error(ValidationError) listing every violated
/// constraint (unknown keys, missing a/b/c, bad modulus, bad windows).
SessionConfig parse_config(const std::string& text);
/// Canonical text; parse_config(to_text(c)) == c.
std::string to_text(const SessionConfig& config);

/// Named points of the config; `auto` ones come from Session::auto_point.
/// Throws Error(NotOnCurve) for explicit coordinates off the curve.
std::map<std::string, Point> resolve_points(const Session& s, const SessionConfig& config);

}  // namespace skw
