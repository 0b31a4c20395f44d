#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace extlab {

/// Runs one command. Exit status: 0 success, 1 verification failure (a
/// witness is printed), 2 malformed input (position-annotated for parse
/// errors). The EXTENDLAB_EPS environment variable overrides the default
/// tolerance of 1e-9.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace extlab
