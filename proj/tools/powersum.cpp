#include <iostream>

#include "powersum/cli.hpp"

int main(int argc, char** argv) { return powersum::cli::run(argc, argv, std::cout, std::cerr); }
