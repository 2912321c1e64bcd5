#include "stieltjes2d/cli.hpp"

#include <iostream>
#include <vector>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return stieltjes2d::run_cli(args, std::cout, std::cerr);
}
