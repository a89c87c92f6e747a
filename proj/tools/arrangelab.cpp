#include <iostream>

#include "arrangelab/cli.h"

int main(int argc, char** argv) {
    return arrangelab::cli::run({argv, argv + argc}, std::cin, std::cout, std::cerr);
}
