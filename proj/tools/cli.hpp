#pragma once

#include <iosfwd>

namespace implycim::cli {

// Exit status: 0 success, 1 runtime error, 2 usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace implycim::cli
