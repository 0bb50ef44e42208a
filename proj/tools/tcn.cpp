#include <iostream>

#include "tcn/cli.hpp"

int main(int argc, char** argv)
{
    return tcn::run_cli(argc, argv, std::cout, std::cerr);
}
