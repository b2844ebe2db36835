#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kummerlab::cli {

// exit codes: 0 success, 2 validation error, 3 infeasible/empty result on an
// existence-shaped query, 64 unknown subcommand
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace kummerlab::cli
