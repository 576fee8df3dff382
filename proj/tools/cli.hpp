#pragma once

#include <iosfwd>

namespace omegalab {

// Exit codes: 0 ok, 1 usage error, 2 resource refusal, 3 internal invariant failure.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace omegalab
