#include <iostream>

#include "rkit/cli.hpp"

int main(int argc, char** argv) { return rkit::cli_dispatch(argc, argv, std::cout, std::cerr); }
