#include "liedec/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return liedec::cli::run(argc, argv, std::cout, std::cerr); }
