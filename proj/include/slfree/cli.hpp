#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace slfree {

// Dispatches one CLI invocation.  JSON results go to out, diagnostics to err.
// Exit status: 0 success, 1 engine-reported failure (verification failures,
// inconsistent tables, decomposition failure, degenerate split), 2 usage or
// parse error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace slfree
