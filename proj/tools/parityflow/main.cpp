#include <unistd.h>

#include <cstdlib>
#include <iostream>

#include "app.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    parityflow::cli::Options opt;
    opt.color = std::getenv("NO_COLOR") == nullptr && isatty(STDOUT_FILENO);
    return parityflow::cli::run(args, std::cout, std::cerr, opt);
}
