#include "bilin/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return bilin::runCli(argc, argv, std::cout, std::cerr); }
