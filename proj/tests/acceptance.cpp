#include <chrono>
#include <iostream>

#include "diagsurf/acceptance.hpp"

int main(int argc, char** argv) {
  using clock = std::chrono::steady_clock;
  const auto start = clock::now();
  const diagsurf::AcceptanceRun run = diagsurf::run_acceptance();
  const auto secs = std::chrono::duration<double>(clock::now() - start).count();

  std::cout << run.log();
  if (argc > 1) diagsurf::write_exports(run, argv[1]);

  int failed = 0;
  for (const auto& c : run.criteria)
    if (!c.pass) ++failed;
  std::cout << "\nsummary: " << run.criteria.size() - failed << "/" << run.criteria.size() << " criteria pass ("
            << secs << " s)\n";
  return run.pass() ? 0 : 1;
}
