#include "diagsurf/cli.hpp"

int main(int argc, char** argv) { return diagsurf::cli::run(argc, argv); }
