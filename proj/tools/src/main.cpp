#include <iostream>

#include "worldseq_cli/cli.hpp"

int main(int argc, char** argv) { return worldseq::cli::cli_main(argc, argv, std::cout, std::cerr); }
