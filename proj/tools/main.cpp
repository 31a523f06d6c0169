#include <iostream>
#include <string>
#include <vector>

#include "sqbetti/io.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return sqbetti::run_cli(args, std::cout, std::cerr);
}
