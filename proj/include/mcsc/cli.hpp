#pragma once

namespace mcsc {

// Entry point behind the mcsc binary. Exit codes: 0 on success (a reported
// deadlock counts as a successfully computed outcome), 1 on a negative
// solver-level result (invalid solution, infeasible instance), 2 on
// usage/parse errors.
int cli_main(int argc, const char* const* argv);

}  // namespace mcsc
