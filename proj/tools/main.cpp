#include <iostream>

#include "simpeff/cli.hpp"

int main(int argc, char** argv) { return simpeff::cli::run_cli(argc, argv, std::cout, std::cerr); }
