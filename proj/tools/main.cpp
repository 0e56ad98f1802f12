#include <iostream>

#include "kbranch/cli.hpp"

int main(int argc, char** argv) { return kbranch::run_cli(argc, argv, std::cout, std::cerr); }
