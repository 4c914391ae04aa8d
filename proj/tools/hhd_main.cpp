#include <iostream>

#include "hhd/cli.hpp"

int main(int argc, char** argv) { return hhd::cli::run(argc, argv, std::cout, std::cerr); }
