#include "regcyc/cli.hpp"

int main(int argc, char** argv) { return regcyc::cli_main(argc, argv); }
