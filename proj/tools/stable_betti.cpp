#include <iostream>

#include "betti/cli.hpp"

int main(int argc, char** argv)
{
    return betti::cli::run(argc, argv, std::cout, std::cerr);
}
