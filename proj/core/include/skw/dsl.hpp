#pragma once

#include <map>
#include <string>

#include "skw/curve.hpp"
#include "skw/divisor.hpp"

namespace skw {

/// Divisor expressions over named points:
///   divisor := ['-'] term (('+' | '-') term)*
///   term    := [UINT '*'] NAME ['@' INT]
/// `P@j` is p^{sigma^j}. Throws ParseError (column in line()) and
/// Error(UnknownPoint).
Divisor parse_divisor(const std::string& expr, const std::map<std::string, Point>& points, const Curve& E);

}  // namespace skw
