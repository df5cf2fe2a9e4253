#pragma once

namespace heis {

// Entry point of the heis-cmc tool. Exit codes: 0 success, 1 infeasible or
// out-of-domain parameters (or a failed `check`), 2 I/O and parse errors.
int cli_main(int argc, char** argv);

}  // namespace heis
