#include <iostream>

#include "verifier.hpp"

int main(int argc, char** argv) { return fraclog::cli::run(argc, argv, std::cout, std::cerr); }
