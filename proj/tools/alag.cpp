#include <iostream>

#include "alag/cli.hpp"

int main(int argc, char** argv) { return alag::main_with_args(argc, argv, std::cout, std::cerr); }
