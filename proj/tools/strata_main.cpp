#include <iostream>
#include <string>
#include <vector>

#include "strata/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return strata::run_command(args, std::cout, std::cerr);
}
