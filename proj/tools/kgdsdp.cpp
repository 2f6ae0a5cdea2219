#include <iostream>

#include "kgd/cli.hpp"

int main(int argc, char** argv) {
    std::ios::sync_with_stdio(false);
    return kgd::cli::run(argc, argv, std::cout, std::cerr);
}
