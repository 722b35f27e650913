#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "turanc/graph.hpp"

namespace turanc {

/// Runs the command-line front end. `args[0]` is the program name.
/// Returns the process exit code: 0 when every check in the invocation
/// passed, 1 when a check failed, 2 on usage or input errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Host graph argument: "g6:<graph6>", "adj:<n>:<rows>", "@<file>" (first
/// non-empty line in either format), or "<construction>:<n>" for the small
/// named constructions.
Graph parse_host(const std::string& spec);

std::string library_version();

}  // namespace turanc
