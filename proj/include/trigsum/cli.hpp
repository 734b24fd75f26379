#pragma once

#include <iosfwd>

namespace trigsum {

// Exit codes: 0 everything passed, 1 a verification failed, 2 usage or
// constraint error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace trigsum
