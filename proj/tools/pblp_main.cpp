#include "pblp/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return pblp::run_cli(argc, argv, std::cout, std::cerr); }
