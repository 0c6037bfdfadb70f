#include <iostream>

#include "bt/cli.hpp"

int main(int argc, char** argv) { return bt::cli::main_entry(argc, argv, std::cout, std::cerr); }
