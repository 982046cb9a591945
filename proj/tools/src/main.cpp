#include <iostream>

#include "eulercf_tools/cli.hpp"

int main(int argc, char** argv) { return eulercf::tools::run(argc, argv, std::cout, std::cerr); }
