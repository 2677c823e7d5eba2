#include <iostream>

#include "hqc/cli.hpp"

int main(int argc, char** argv) { return hqc::cli::run(argc, argv, std::cout, std::cerr); }
