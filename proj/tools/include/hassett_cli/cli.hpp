#pragma once

#include <iosfwd>

namespace hassett::cli {

/// Exit codes: 0 all checks pass, 1 a check failed, 2 usage or validation error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hassett::cli
