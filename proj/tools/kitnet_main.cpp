#include "kitnet/cli.hpp"

int main(int argc, char** argv) { return kitnet::cli::run_main(argc, argv); }
