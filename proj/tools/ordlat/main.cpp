#include <iostream>

#include "ordlat/cli.hpp"

int main(int argc, char** argv) { return ordlat::cli::run(argc, argv, std::cout, std::cerr); }
