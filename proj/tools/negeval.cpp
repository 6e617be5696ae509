#include <iostream>

#include "negeval/cli.hpp"

int main(int argc, char** argv) { return negeval::cli::run(argc, argv, std::cout, std::cerr); }
