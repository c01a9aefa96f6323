#pragma once
#include <iosfwd>
#include <string>
#include <vector>

namespace k3g::cli {

/// Runs one command line (program name excluded). Exit codes: 0 success,
/// 1 usage or domain error, 2 internal invariant violation.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace k3g::cli
