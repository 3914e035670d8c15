#include <iostream>
#include <string>
#include <vector>

#include "ftqc/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return ftqc::run_command(args, std::cout, std::cerr);
}
