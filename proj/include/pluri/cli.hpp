#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace pluri {

/// Runs one command line (args excludes the program name). Returns 0 on
/// success, 1 when a verification fails and 2 on a usage error.
///
/// The cache directory is taken from --cache-dir, else from the
/// PLURI_CACHE_DIR environment variable; without either nothing is cached.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pluri
