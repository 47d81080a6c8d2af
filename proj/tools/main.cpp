#include <iostream>
#include <string>
#include <vector>

#include "stereorig/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return stereorig::cli_dispatch(args, std::cout, std::cerr);
}
