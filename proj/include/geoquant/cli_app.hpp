#pragma once

namespace geoquant {

// Entry point for the command line front end.  Returns the process exit
// code: 0 when every emitted report passes, 1 on a failed check, 2 on an
// unknown subcommand, malformed configuration, or invalid parameters.
int run_cli(int argc, char** argv);

}  // namespace geoquant
