#include "weylpark/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return weylpark::cli::run(argc, argv, std::cout, std::cerr); }
