#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace motzeta::cli {

/// Runs one invocation; args excludes the program name. Returns 0 on success,
/// 1 on a computational error (invalid model, unassigned symbol, ...), and 2
/// on a usage error.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace motzeta::cli
