#include "cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return riesz::cli::execute(argc, argv, std::cout, std::cerr);
}
