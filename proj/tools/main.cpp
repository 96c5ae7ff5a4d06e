#include "commands.hpp"

#include <iostream>

int main(int argc, char** argv) {
    const auto res = dynkin::cli::run(std::vector<std::string>(argv + 1, argv + argc));
    std::cout << res.out;
    std::cerr << res.err;
    return res.code;
}
