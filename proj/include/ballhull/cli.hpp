#pragma once

#include <ostream>

namespace ballhull::cli {

/// Runs one command line. Exit codes: 0 success, 1 bad input, 2 empty or
/// infeasible result (the result file is still written).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ballhull::cli
