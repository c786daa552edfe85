#include <iostream>

#include "rzs/cli.hpp"

int main(int argc, char** argv) { return rzs::cli::main(argc, argv, std::cout, std::cerr); }
