#include "balword/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return balword::cli::run(argc, argv, std::cout, std::cerr); }
