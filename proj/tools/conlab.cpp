#include <iostream>

#include "conlab/cli/run.hpp"

int main(int argc, char** argv) { return conlab::cli::run(argc, argv, std::cout, std::cerr); }
