#include <iostream>

#include "mhs/cli.hpp"

int main(int argc, char** argv) {
    return mhs::run_cli(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
