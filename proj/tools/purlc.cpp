#include "purl/cli.hpp"

int main(int argc, char** argv) { return purl::cli_main(argc, argv); }
