#include "mwl/cli.hpp"

int main(int argc, char** argv) { return mwl::run_cli(argc, argv); }
