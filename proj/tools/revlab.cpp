#include "revivals/cli.hpp"

int main(int argc, char** argv) { return revivals::cli::main_entry(argc, argv); }
