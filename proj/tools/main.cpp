#include "cli.hpp"

int main(int argc, char** argv) { return nek::cli::main_entry(argc, argv); }
