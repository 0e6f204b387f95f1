#include <iostream>

#include "mcolour/cli.hpp"

int main(int argc, char** argv) { return mcolour::cli::run(argc, argv, std::cout, std::cerr); }
