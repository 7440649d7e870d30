#include "qfv/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return qfv::run_cli(args, std::cout, std::cerr);
}
