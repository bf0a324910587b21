#include <iostream>
#include <string>
#include <vector>

#include "flipcover/run.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return flipcover::run(args, std::cout, std::cerr);
}
