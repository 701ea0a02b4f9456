#include <iostream>

#include "pcdfa/cli.hpp"

int main(int argc, char** argv) { return pcdfa::run_cli(argc, argv, std::cout, std::cerr); }
