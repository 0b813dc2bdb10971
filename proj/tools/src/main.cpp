#include "grpwild_cli/commands.hpp"

int main(int argc, char** argv) { return grpwild::cli::run_main(argc, argv); }
