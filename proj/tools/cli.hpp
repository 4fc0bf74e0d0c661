#ifndef TOPOHL_TOOLS_CLI_HPP_
#define TOPOHL_TOOLS_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace topohl::cli {

// Exit status: 0 success / SAT / holds, 1 UNSAT / fails, 2 usage or input
// error. args excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace topohl::cli

#endif  // TOPOHL_TOOLS_CLI_HPP_
