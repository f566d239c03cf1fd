#include "strongfact/cli.hpp"

int main(int argc, char** argv) { return strongfact::cli_main(argc, argv); }
