#include "simplex_angles/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return simplex_angles::cli::run(argc, argv, std::cout, std::cerr); }
