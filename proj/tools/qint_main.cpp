#include "qint/cli.hpp"

int main(int argc, char** argv) { return qint::cli::main_entry(argc, argv); }
