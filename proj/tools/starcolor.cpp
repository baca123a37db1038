#include <iostream>

#include "starcolor_cli.hpp"

int main(int argc, char** argv) { return starcolor::cli::run(argc, argv, std::cout, std::cerr); }
