#include "cegis/cli.hpp"

int main(int argc, char** argv) { return cegis::cli::main(argc, argv); }
