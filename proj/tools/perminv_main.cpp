#include <iostream>

#include "perminv/cli.hpp"

int main(int argc, char** argv) { return perminv::cli_main(argc, argv, std::cout, std::cerr); }
