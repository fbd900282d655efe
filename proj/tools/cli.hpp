#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ohomres::cli {

/// Runs one ohomresolve invocation; args excludes the program name.
/// Returns 0 on success or a true predicate, 1 on a false predicate or failed
/// verification, 2 on usage or input errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ohomres::cli
