#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ffht::cli {

/// Parses and executes one command line (program name excluded). Normal
/// output goes to out (or the --out file), diagnostics to err. Returns 0
/// on success, 1 on domain errors, 2 on usage errors. Stateless across
/// calls, so tests can drive the CLI in-process.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace ffht::cli
