#include <iostream>

#include "pgcert/cli.hpp"

int main(int argc, char** argv) { return pgcert::cli::run(argc, argv, std::cout, std::cerr); }
