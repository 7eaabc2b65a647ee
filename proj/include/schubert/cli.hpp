#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace schubert::cli {

/// Runs the command line front end on args (without the program name).
/// Returns 0 on success, 1 on a domain error, 2 on a usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace schubert::cli
