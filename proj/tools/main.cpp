#include <cstdlib>
#include <iostream>

#include "ldstat/cli/run.hpp"

int main(int argc, char** argv) {
  ldstat::cli::Environment env;
  if (const char* base = std::getenv("GN_BASE"); base && *base) env.gn_base = base;
  return ldstat::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr, env);
}
