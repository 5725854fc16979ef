#include <iostream>

#include "hardy/cli/commands.hpp"

int main(int argc, char** argv) { return hardy::cli::run(argc, argv, std::cout, std::cerr); }
