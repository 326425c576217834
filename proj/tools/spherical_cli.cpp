#include <iostream>
#include <string>
#include <vector>

#include "cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    const auto out = spherical::cli::main_with_args(args);
    (out.exit_code == 0 ? std::cout : std::cerr) << out.output;
    return out.exit_code;
}
