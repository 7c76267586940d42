#include <iostream>
#include <vector>

#include "knotforms/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return knotforms::run_cli(args, std::cout, std::cerr);
}
