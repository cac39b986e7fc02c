#include <iostream>

#include "derivar/cli.hpp"

int main(int argc, char** argv) {
    return derivar::run_cli(argc, argv, std::cout, std::cerr);
}
