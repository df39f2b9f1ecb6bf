#include <iostream>

#include "affkl/cli.hpp"

int main(int argc, char** argv) {
    return affkl::run_cli(argc, argv, std::cout);
}
