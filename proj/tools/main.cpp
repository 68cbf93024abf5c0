#include "cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return zaremba::cli::run(argc, argv, std::cout, std::cerr);
}
