#include <iostream>

#include "finact/cli.hpp"

int main(int argc, char** argv) { return finact::run_cli(argc, argv, std::cout, std::cerr); }
