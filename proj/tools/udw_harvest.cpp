#include "udw/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return udw::run_cli(argc, argv, std::cout, std::cerr); }
