#include <iostream>
#include <string>
#include <vector>

#include "cohomjump/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return cohomjump::run_cli(args, std::cout, std::cerr);
}
