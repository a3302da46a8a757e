#include "ualg/commands.hpp"

int main(int argc, char** argv) { return ualg::run_cli(argc, argv); }
