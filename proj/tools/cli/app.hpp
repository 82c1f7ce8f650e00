#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace rlab_cli {

// Full command line (args[0] is the program name). `env_out` stands in for
// RESTRICTION_LAB_OUT. Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            const std::string& env_out = "");

}  // namespace rlab_cli
