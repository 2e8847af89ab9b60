#include <iostream>
#include <string>
#include <vector>

#include "chaocrypt/cli.hpp"

int main(int argc, char** argv) {
  return chaocrypt::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
