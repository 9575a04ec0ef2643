#include "einsu/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return einsu::run_cli(argc, argv, std::cout, std::cerr); }
