#include <iostream>

#include "hiergraph/cli.hpp"

int main(int argc, char** argv) { return hiergraph::cli::run(argc, argv, std::cout, std::cerr); }
