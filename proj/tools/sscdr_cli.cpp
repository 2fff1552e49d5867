#include <iostream>

#include "sscdr/cli.hpp"

int main(int argc, char** argv) { return sscdr::cli::run(argc, argv, std::cout, std::cerr); }
