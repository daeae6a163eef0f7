#include <iostream>

#include "cli.hh"

int main(int argc, char** argv) { return bamin::cli::run(argc, argv, std::cout, std::cerr); }
