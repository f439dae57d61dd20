#include <iostream>

#include "tukey/cli.hpp"

int main(int argc, char** argv) { return tukey::cli::run(argc, argv, std::cout, std::cerr); }
