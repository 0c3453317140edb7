#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace taft {

// Command-line front end.  Commands: verify, fusion, smatrix, malle, compare,
// decompose.  Common flags: --d, --e, --format {json, latex, text}, --force,
// --out FILE.  Exit codes: 0 success, 1 check failure, 2 usage error.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

// Same, from command arguments without the program name (test convenience).
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace taft
