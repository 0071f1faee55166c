#include <iostream>

#include "supernorm_cli/cli.hpp"

int main(int argc, char** argv) {
    std::ios::sync_with_stdio(false);
    return supernorm::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
