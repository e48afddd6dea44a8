#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "skw/sklyanin.hpp"
#include "skw/subalg.hpp"

namespace skw::cli {

enum Exit : int { kOk = 0, kCheckFailed = 1, kInputError = 2 };

/// Entry point of the skw tool. Never throws; returns an Exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Generator file: `degree: c_0 c_1 ...`, one vector of S_degree
/// coordinates per line, `#` comments. Lines of equal degree are spanned
/// together. Throws ParseError with the line number.
std::vector<Generator> parse_generators(const std::string& text, const GradedAlgebraModel& S);

}  // namespace skw::cli
