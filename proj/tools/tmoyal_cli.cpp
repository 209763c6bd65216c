#include "tmoyal/cli.hpp"

int main(int argc, char** argv) { return tmoyal::run_cli(argc, argv); }
