#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace branchlab {

/// Runs the command line tool. Exit codes: 0 success, 1 verification
/// failure, 2 usage or budget error.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int cli_main(int argc, char** argv);

}  // namespace branchlab
