#include "cardzk/cli.hpp"

int main(int argc, char** argv) { return cardzk::run_cli(argc, argv); }
