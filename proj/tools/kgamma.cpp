#include <iostream>

#include "kgamma/cli.hpp"

int main(int argc, char** argv) { return kgamma::cli::run(argc, argv, std::cout, std::cerr); }
