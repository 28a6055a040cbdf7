#include <iostream>
#include <string>
#include <vector>

#include "conic2bezier/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return conic2bezier::run_cli(args, std::cout, std::cerr);
}
