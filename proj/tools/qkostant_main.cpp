#include "qkostant/cli.hpp"

int main(int argc, char** argv) { return qk::cli::run_main(argc, argv); }
