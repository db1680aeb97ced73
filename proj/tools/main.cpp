#include <iostream>

#include "ballhull/cli.hpp"

int main(int argc, char** argv) { return ballhull::cli::run(argc, argv, std::cout, std::cerr); }
