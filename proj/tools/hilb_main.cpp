#include <string>
#include <vector>

#include "hilb/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return hilb::cli::run(args);
}
