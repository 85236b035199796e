#include <iostream>

#include "rgdual/cli.hpp"

int main(int argc, char** argv) { return rgdual::run_cli(argc, argv, std::cout, std::cerr); }
