#pragma once

#include <ostream>

namespace cy2::cli {

// Exit codes: 0 pass, 1 invariant violation, 2 configuration error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cy2::cli
