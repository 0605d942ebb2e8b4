#include <iostream>
#include <string>
#include <vector>

#include "altfree/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    const altfree::CommandResult r = altfree::run(args);
    std::cout << r.output;
    std::cerr << r.diagnostics;
    return r.exit_code;
}
