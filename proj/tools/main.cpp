#include "torimax/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
  torimax::RunConfig config;
  int status = torimax::parse_cli(argc, argv, config, std::cout, std::cerr);
  if (status >= 0) return status;
  return torimax::run(config, std::cout, std::cerr);
}
