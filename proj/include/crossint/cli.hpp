#pragma once

// Command-line surface. Exit codes: 0 success / property true,
// 1 property violated / false, 2 usage, format, or parameter errors.

#include <iosfwd>
#include <string>
#include <vector>

namespace crossint {

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace crossint
