#include "tenslab/cli.hpp"

int main(int argc, char** argv) { return tenslab::cli_main(argc, argv); }
