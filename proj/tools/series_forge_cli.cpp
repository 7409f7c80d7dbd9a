#include <iostream>
#include <string>
#include <vector>

#include <series_forge/cli.hpp>

int main(int argc, char **argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return series_forge::cli::run_cli(args, std::cout, std::cerr);
}
