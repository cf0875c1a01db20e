#include "mcsc/cli.hpp"

int main(int argc, char** argv) { return mcsc::cli_main(argc, argv); }
