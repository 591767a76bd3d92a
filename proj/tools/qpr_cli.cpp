#include <iostream>

#include "qpr/experiment.hpp"

int main(int argc, char** argv) { return qpr::run_cli(argc, argv, std::cout, std::cerr); }
