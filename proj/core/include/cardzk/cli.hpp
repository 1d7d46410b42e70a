#pragma once

namespace cardzk {

// Front end behind the `cardzk` binary. Returns the process exit status:
// 0 accept / distributions equal, 1 reject / distributions differ,
// 2 usage, parse or capacity errors.
int run_cli(int argc, const char* const* argv);

}  // namespace cardzk
