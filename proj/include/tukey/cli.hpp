#pragma once

// Command-line front end. Exit codes: 0 success, 1 malformed input or arguments,
// 2 inconsistent descriptor, 3 Unknown under --require-decision, 4 search budget exceeded,
// 5 a check suite reported violations.

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "tukey/classifier.hpp"

namespace tukey {

struct ParsedSpace {
  Space space;
  std::string canonical;  // re-parseable text
};

/// Builtins S0, S2, CLUB, CLUB_MINUS_POINT and S1, `unbounded(...)` descriptors, or a
/// bounded set expression. Throws ParseError; descriptors are not validated here.
ParsedSpace parse_space(std::string_view text);

/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tukey
