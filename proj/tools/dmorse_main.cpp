#include "dmorse/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    return dmorse::run_cli(argc, argv, std::cout);
}
