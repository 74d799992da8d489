#include <iostream>

#include "lieframe/cli.hpp"

int main(int argc, char** argv) { return lieframe::cli_main(argc, argv, std::cout, std::cerr); }
