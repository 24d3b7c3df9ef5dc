#include <iostream>

#include "lombardi_cli/cli.hpp"

int main(int argc, char** argv) { return lombardi::cli::dispatch(argc, argv, std::cout, std::cerr); }
