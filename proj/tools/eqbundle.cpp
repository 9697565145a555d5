#include "eqb/cli.hpp"

int main(int argc, char** argv) { return eqb::cli::run_main(argc, argv); }
