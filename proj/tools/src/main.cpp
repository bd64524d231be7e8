#include "hassett_cli/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return hassett::cli::run(argc, argv, std::cout, std::cerr); }
