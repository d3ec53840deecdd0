#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hhodge::cli {

/// Runs one hhodge invocation.  args excludes the program name.
/// Returns 0 on success, 1 on parse/validation errors, 2 on an internal
/// inconsistency (a two-path mismatch or a corrupted cache).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hhodge::cli
