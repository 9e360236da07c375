#include "gaborlab/cli.hpp"

int main(int argc, char** argv) { return gaborlab::run_cli(argc, argv); }
