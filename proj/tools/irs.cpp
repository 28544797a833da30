#include <iostream>

#include "irs/cli.hpp"

int main(int argc, char** argv) {
  const auto parsed = irs::cli::parse_args(argc, argv, std::cout, std::cerr);
  if (!parsed.config) return parsed.exit_code;
  return irs::cli::run(*parsed.config, std::cout, std::cerr);
}
