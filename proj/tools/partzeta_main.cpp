#include <iostream>

#include "partzeta/cli.hpp"

int main(int argc, char** argv) { return partzeta::cli::run(argc, argv, std::cout, std::cerr); }
