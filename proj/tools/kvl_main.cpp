#include <iostream>
#include <string>
#include <vector>

#include "kvl/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return kvl::cli_dispatch(args, std::cout, std::cerr);
}
