#include <iostream>

#include "hnc/cli.hpp"

int main(int argc, char** argv) { return hnc::run_cli(argc, argv, std::cout, std::cerr); }
