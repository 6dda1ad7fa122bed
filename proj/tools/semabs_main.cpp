#include "semabs/cli.hpp"

int main(int argc, char** argv) { return semabs::run_cli(argc, argv); }
