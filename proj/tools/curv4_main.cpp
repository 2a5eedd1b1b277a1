#include "curv4/cli.hpp"

int main(int argc, char** argv) { return curv4::cli_main(argc, argv); }
