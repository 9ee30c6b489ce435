#include "confpair/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return confpair::cli::run(argc, argv, std::cin, std::cout, std::cerr); }
