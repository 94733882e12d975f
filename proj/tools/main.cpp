#include <iostream>

#include "pareto/cli.hpp"

int main(int argc, char** argv) { return pareto::cli::run(argc, argv, std::cout, std::cerr); }
