#include "cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    return draftval::cli::run(argc, argv, std::cout, std::cerr);
}
