#include <iostream>

#include "plovkit/cli.hpp"

int main(int argc, char** argv) { return plovkit::run_cli(argc, argv, std::cout, std::cerr); }
