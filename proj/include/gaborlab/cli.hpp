#pragma once

// Command-line front end.  One subcommand per laboratory operation; every
// run writes its artifacts plus a run.json manifest echoing the resolved
// configuration, so identical argv (and seed) reproduce identical bytes.
// Exit status: 0 success, 1 numerical failure reported by a module, 2 usage
// error.  Configuration is explicit: no environment variables are consulted.

namespace gaborlab {

int run_cli(int argc, const char* const* argv);

}  // namespace gaborlab
