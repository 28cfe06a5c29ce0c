#include <iostream>

#include "hopfkit/cli.hpp"

int main(int argc, char** argv) { return hopfkit::cli::run(argc, argv, std::cout, std::cerr); }
