#include "sl2ext/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    return sl2ext::run_cli({argv + 1, argv + argc}, std::cout, std::cerr);
}
