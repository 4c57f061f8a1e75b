#include <iostream>

#include "lisgf/cli.hpp"

int main(int argc, char** argv) { return lisgf::run_cli(argc, argv, std::cout, std::cerr); }
