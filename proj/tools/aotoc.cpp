#include "aotoc/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return aotoc::cli::run(argc, argv, std::cout, std::cerr); }
