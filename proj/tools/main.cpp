#include "cli.hpp"

int main(int argc, char** argv) { return hyperpi::cli::main_impl(argc, argv); }
