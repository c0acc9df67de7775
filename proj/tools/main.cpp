#include "cli.hpp"

int main(int argc, char** argv) { return quiverpar::cli::main_entry(argc, argv); }
