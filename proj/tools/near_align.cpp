#include <iostream>

#include "nearalign/cli.hpp"

int main(int argc, char** argv)
{
    return nearalign::cli::run(argc, argv, std::cout, std::cerr);
}
