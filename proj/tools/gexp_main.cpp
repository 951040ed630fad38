#include <iostream>

#include "gexp/cli.hpp"

int main(int argc, char** argv) { return gexp::run_cli(argc, argv, std::cout, std::cerr); }
