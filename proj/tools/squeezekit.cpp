#include <iostream>

#include "squeezekit/cli.hpp"

int main(int argc, char** argv) { return squeezekit::cli::dispatch(argc, argv, std::cout, std::cerr); }
