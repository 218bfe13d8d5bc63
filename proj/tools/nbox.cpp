#include "nbox/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return nbox::run_cli(argc, argv, std::cout, std::cerr);
}
