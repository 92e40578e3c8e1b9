#include <iostream>

#include "finlat/cli/commands.hpp"

int main (int argc, char** argv) { return finlat::cli::run (argc, argv, std::cout, std::cerr); }
