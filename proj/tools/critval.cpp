#include <iostream>

#include "critval/cli/commands.hpp"

int main(int argc, char** argv) { return critval::cli::run_main(argc, argv, std::cout, std::cerr); }
