#include <iostream>

#include "alphalab/cli.hpp"

int main(int argc, char** argv) {
    return alphalab::runCli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
