#include <iostream>

#include "ordtop/cli.hpp"

int main(int argc, char **argv) { return ordtop::cli::run(argc, argv, std::cout, std::cerr); }
