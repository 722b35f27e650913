#include <iostream>
#include <string>
#include <vector>

#include "turanc/cli.hpp"

int main(int argc, char** argv) {
    return turanc::run_cli(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
