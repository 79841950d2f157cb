#include <exception>
#include <iostream>

#include "boxlab/cli.hpp"

int main(int argc, char** argv) {
    try {
        return boxlab::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
    } catch (const std::exception& e) {
        std::cerr << "fatal: " << e.what() << '\n';
        return 3;
    }
}
