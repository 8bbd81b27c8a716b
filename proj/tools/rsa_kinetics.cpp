#include <iostream>
#include <string>
#include <vector>

#include "rsa/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return rsa::cli::run(args, std::cout, std::cerr);
}
