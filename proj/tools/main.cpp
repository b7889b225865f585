#include <iostream>

#include "threeway/app/commands.hpp"

int main(int argc, char** argv) { return threeway::app::run_cli(argc, argv, std::cout, std::cerr); }
