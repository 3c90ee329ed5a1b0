#include <iostream>
#include <string>
#include <vector>

#include "k25/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return k25::cli::run(args, std::cout, std::cerr);
}
