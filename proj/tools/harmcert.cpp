#include "harmcert/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return harmcert::cli::run(argc, argv, std::cout, std::cerr);
}
