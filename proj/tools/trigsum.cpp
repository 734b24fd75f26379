#include <iostream>

#include "trigsum/cli.hpp"

int main(int argc, char** argv) { return trigsum::run_cli(argc, argv, std::cout, std::cerr); }
