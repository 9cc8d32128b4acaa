#ifndef laminar_cli_hpp
#define laminar_cli_hpp

#include <iosfwd>
#include <string>
#include <vector>

namespace laminar::cli {

// Exit codes of every subcommand.
enum ExitCode : int {
    kHolds = 0,
    kFails = 1,
    kUsage = 2,
    kRefused = 3,
};

// args[0] is the program name. JSON (or the generated graph) goes to
// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}

#endif /* laminar_cli_hpp */
