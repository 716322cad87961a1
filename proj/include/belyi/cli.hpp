#ifndef BELYI_CLI_HPP
#define BELYI_CLI_HPP

#include <string>
#include <vector>

namespace belyi {

// Runs one CLI invocation (argv without the program name).  Output goes to
// the given streams so tests can run commands in-process.
// Exit status: 0 success, 1 domain failure (no solutions, failed check),
// 2 usage error.
int command_dispatch(const std::vector<std::string>& args, std::ostream& out,
                     std::ostream& err);

}  // namespace belyi

#endif
