#include <iostream>

#include "sympexp/cli.hpp"

int main(int argc, char** argv) { return sympexp::cli::run(argc, argv, std::cout, std::cerr); }
