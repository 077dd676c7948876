#include <iostream>

#include "quivermod/cli.hpp"

int main(int argc, char** argv) { return quivermod::run_cli(argc, argv, std::cout, std::cerr); }
