#include <iostream>

#include "hrg/cli.hpp"

int main(int argc, char** argv) { return hrg::run_cli(argc, argv, std::cout, std::cerr); }
