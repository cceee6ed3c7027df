#include <iostream>

#include "mpersp/cli.hpp"

int main(int argc, char** argv) { return mpersp::run_cli(argc, argv, std::cout, std::cerr); }
