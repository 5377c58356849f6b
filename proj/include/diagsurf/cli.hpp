#pragma once

namespace diagsurf::cli {

// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 size exceeded.
int run(int argc, char** argv);

}  // namespace diagsurf::cli
