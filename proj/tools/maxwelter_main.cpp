#include <iostream>

#include "maxwelter/cli.hpp"

int main(int argc, char** argv) { return maxwelter::run_cli(argc, argv, std::cout, std::cerr); }
