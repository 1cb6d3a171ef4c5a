#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace wsg::cli {

inline constexpr const char* kSchemaVersion = "1";

// Exit codes: 0 success, 1 verification failure, 2 invalid flags or
// parameters.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wsg::cli
