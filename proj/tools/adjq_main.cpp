#include "adjq/cli.hpp"

int main(int argc, char** argv) { return adjq::cli::main_entry(argc, argv); }
