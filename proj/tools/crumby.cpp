#include <iostream>

#include "crumby/cli.hpp"

int main(int argc, char** argv) { return crumby::run_cli(argc, argv, std::cin, std::cout, std::cerr); }
