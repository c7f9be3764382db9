#include <iostream>

#include "noether/cli.hpp"

int main(int argc, char** argv) { return noether::cli::main_entry(argc, argv, std::cout, std::cerr); }
