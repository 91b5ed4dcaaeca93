#include <iostream>
#include <string>
#include <vector>

#include "run.hpp"

int main(int argc, char** argv) {
    return hdconc::cli::run_cli(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
