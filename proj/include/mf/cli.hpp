#pragma once

namespace mf {

// Entry point of the mf tool. Exit codes: 0 success, 1 invariant or check
// failure, 2 usage or parse error.
int run_cli(int argc, const char* const* argv);

}  // namespace mf
