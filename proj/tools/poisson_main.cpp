#include "poisson/cli.hpp"

int main(int argc, char** argv) { return poisson::run_cli(argc, argv); }
