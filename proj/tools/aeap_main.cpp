#include <iostream>

#include "aeap/cli.hpp"

int main(int argc, char** argv) { return aeap::cli_main(argc, argv, std::cout, std::cerr); }
