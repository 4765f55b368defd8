#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace constakit {

// Runs the command-line interface against explicit streams.
// Returns 0 on success, 1 on any usage or computation error, 2 when a
// criterion consistency check reports a verified disagreement.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace constakit
