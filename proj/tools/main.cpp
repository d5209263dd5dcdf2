#include "striphom/cli.hpp"

int main(int argc, char** argv) { return striphom::run_cli(argc, argv); }
