#include "wbal/cli.hpp"

int main(int argc, char** argv) { return wbal::run_cli(argc, argv); }
