#include <iostream>

#include "macmahon/cli.hpp"

int main(int argc, char** argv) { return macmahon::run_cli(argc, argv, std::cout, std::cerr); }
