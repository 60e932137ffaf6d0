#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace nsdeg {

/// Runs the nsdeg command line. args excludes the program name. Returns the
/// process exit code: 0 success, 1 usage or computation error, 2 internal
/// invariant violation, 3 theorem failure in a sweep, 4 conjecture
/// counterexample under --strict-conjecture.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nsdeg
