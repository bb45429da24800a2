#include "mshydro/cli.hpp"

int main(int argc, char** argv) { return mshydro::cli_main(argc, argv); }
