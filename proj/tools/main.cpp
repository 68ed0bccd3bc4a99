#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv)
{
    return bohr::cli::run(argc, argv, std::cout, std::cerr);
}
