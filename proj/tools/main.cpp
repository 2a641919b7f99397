#include "ribbons/cli.hpp"

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    std::string stdin_data;
    for (const std::string& a : args) {
        if (a == "-") {
            std::ostringstream buf;
            buf << std::cin.rdbuf();
            stdin_data = buf.str();
            break;
        }
    }
    ribbons::CommandResult res = ribbons::run_cli(args, stdin_data);
    std::cout << res.out;
    std::cerr << res.err;
    return res.code;
}
