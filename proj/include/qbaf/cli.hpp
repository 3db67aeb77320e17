#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qbaf {

// runs the command-line interface on the given arguments (program name
// excluded) and returns the process exit code:
//   0  success
//   1  data or evaluation failure (unreadable file, invalid graph, cycle,
//      failed comparison)
//   2  usage error (unknown command, flag or name; bad QBAF_SEED)
//
// all regular output goes to `out`, diagnostics go to `err`.  the QBAF_SEED
// environment variable provides the default seed for the sampling commands;
// an explicit --seed flag wins over it.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace qbaf
