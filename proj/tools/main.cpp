#include <iostream>
#include <string>
#include <vector>

#include "berge/io.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return berge::cli::dispatch(args, std::cout, std::cerr);
}
