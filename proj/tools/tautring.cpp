#include "tautring/cli.hpp"

int main(int argc, char** argv) { return tautring::cli::main(argc, argv); }
