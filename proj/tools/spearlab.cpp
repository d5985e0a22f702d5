#include <iostream>

#include "spearlab/cli.hpp"

int main(int argc, char** argv) { return spearlab::run_cli(argc, argv, std::cout, std::cerr); }
