/**
 * @file main.cpp
 * @brief Entry point of the `qpl` command-line tool.
 */

#include "qpl/cli/config.hpp"
#include "qpl/cli/dispatch.hpp"

#include <iostream>
#include <string>
#include <vector>

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv + 1, argv + argc);
    return qpl::cli::run(args, qpl::cli::process_environment(), std::cout, std::cerr);
}
