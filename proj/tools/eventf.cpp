#include "eventf/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return eventf::run_cli(args, std::cout, std::cerr);
}
