#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pcdfa {

// Exit codes shared by every subcommand.
enum ExitCode : int {
    kExitOk = 0,        // pass / sat
    kExitFail = 1,      // failed check / unsat
    kExitUsage = 2,     // usage or parse error
    kExitTimeout = 3,
};

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pcdfa
